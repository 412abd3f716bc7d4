#include "bisite/arrangement.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

namespace bisite {

namespace {

constexpr double kMergeTol = 1e-9;   // absolute, on intersection coordinates
constexpr double kParallelTol = 1e-12;  // |sin| between unit normals

double sign_margin(Point2 v) { return 1e-11 * (1.0 + std::abs(v.x) + std::abs(v.y)); }

struct ClipBox {
    double lo_x, lo_y, hi_x, hi_y;

    std::vector<Point2> polygon() const {
        return {{lo_x, lo_y}, {hi_x, lo_y}, {hi_x, hi_y}, {lo_x, hi_y}};
    }
};

// Sutherland-Hodgman clip of a convex polygon against f(p) >= 0.
std::vector<Point2> clip_halfplane(const std::vector<Point2>& poly, double a, double b, double c) {
    std::vector<Point2> out;
    const int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i) {
        const Point2 p = poly[i];
        const Point2 q = poly[(i + 1) % n];
        const double fp = a * p.x + b * p.y + c;
        const double fq = a * q.x + b * q.y + c;
        if (fp >= 0.0) out.push_back(p);
        if ((fp >= 0.0) != (fq >= 0.0)) {
            const double t = fp / (fp - fq);
            out.push_back({p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)});
        }
    }
    return out;
}

// Area-weighted centroid of a simple polygon.
Point2 polygon_centroid(const std::vector<Point2>& poly) {
    double area2 = 0.0, cx = 0.0, cy = 0.0;
    const int n = static_cast<int>(poly.size());
    for (int i = 0; i < n; ++i) {
        const Point2 p = poly[i];
        const Point2 q = poly[(i + 1) % n];
        const double w = cross(p, q);
        area2 += w;
        cx += (p.x + q.x) * w;
        cy += (p.y + q.y) * w;
    }
    if (std::abs(area2) < 1e-300) return poly.empty() ? Point2{0, 0} : poly[0];
    return {cx / (3.0 * area2), cy / (3.0 * area2)};
}

}  // namespace

Line Line::through(Point2 p, Point2 q, SitePair source) {
    Line l;
    l.a = p.y - q.y;
    l.b = q.x - p.x;
    const double len = std::hypot(l.a, l.b);
    if (len == 0.0) throw DegenerateSegment("Line::through: p = q");
    l.a /= len;
    l.b /= len;
    l.c = -(l.a * p.x + l.b * p.y);
    if (l.a < 0.0 || (l.a == 0.0 && l.b < 0.0)) {
        l.a = -l.a;
        l.b = -l.b;
        l.c = -l.c;
    }
    l.source = source;
    return l;
}

int Arrangement::face_index_of(Point2 v, double margin) const {
    std::vector<std::int8_t> sig(lines.size());
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const double sd = lines[i].signed_dist(v);
        if (std::abs(sd) < margin) return -1;
        sig[i] = sd > 0.0 ? 1 : -1;
    }
    const auto it = face_by_signs_.find(sig);
    return it == face_by_signs_.end() ? -1 : it->second;
}

bool Arrangement::euler_ok() const {
    const long long v = static_cast<long long>(vertices.size());
    const long long e = static_cast<long long>(edges.size());
    const long long f = static_cast<long long>(faces.size());
    return (v + 1) - e + f == 2;
}

std::vector<Line> hull_support_lines(const Hull& hull, const std::vector<Point2>& sites) {
    std::vector<Line> lines;
    const int k = hull.k();
    lines.reserve(k);
    for (int t = 0; t < k; ++t) {
        const int i = hull.vertices[t];
        const int j = hull.vertices[(t + 1) % k];
        lines.push_back(Line::through(sites[i], sites[j], SitePair::make(i, j)));
    }
    return lines;
}

Arrangement build_arrangement(std::vector<Line> lines) {
    if (lines.empty()) throw DegenerateInput("build_arrangement: no lines");
    Arrangement arr;
    arr.lines = std::move(lines);
    const int k = static_cast<int>(arr.lines.size());

    // Pairwise intersections, merged within kMergeTol.
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            const Line &li = arr.lines[i], &lj = arr.lines[j];
            const double det = li.a * lj.b - lj.a * li.b;
            if (std::abs(det) < kParallelTol) continue;
            const Point2 p{(li.b * lj.c - lj.b * li.c) / det, (lj.a * li.c - li.a * lj.c) / det};
            int hit = -1;
            for (std::size_t t = 0; t < arr.vertices.size(); ++t) {
                if (std::abs(arr.vertices[t].p.x - p.x) <= kMergeTol &&
                    std::abs(arr.vertices[t].p.y - p.y) <= kMergeTol) {
                    hit = static_cast<int>(t);
                    break;
                }
            }
            if (hit < 0) {
                arr.vertices.push_back({p, {i, j}, {i, j}});
            } else {
                auto& ls = arr.vertices[hit].lines;
                for (int l : {i, j})
                    if (std::find(ls.begin(), ls.end(), l) == ls.end()) ls.push_back(l);
                std::sort(ls.begin(), ls.end());
            }
        }
    }

    // Per-line sorted vertex parameters -> edges.
    std::vector<std::vector<std::pair<double, int>>> on_line(k);
    for (std::size_t t = 0; t < arr.vertices.size(); ++t) {
        for (int l : arr.vertices[t].lines) {
            const Line& ln = arr.lines[l];
            on_line[l].push_back({dot(arr.vertices[t].p - ln.base(), ln.direction()),
                                  static_cast<int>(t)});
        }
    }
    for (int l = 0; l < k; ++l) {
        auto& vs = on_line[l];
        std::sort(vs.begin(), vs.end());
        if (vs.empty()) {
            arr.edges.push_back({l, -1, -1});
            continue;
        }
        arr.edges.push_back({l, -1, vs.front().second});
        for (std::size_t t = 0; t + 1 < vs.size(); ++t)
            arr.edges.push_back({l, vs[t].second, vs[t + 1].second});
        arr.edges.push_back({l, vs.back().second, -1});
    }

    // Face enumeration: offset samples on both sides of every edge midpoint
    // (and ray points), at several offset scales so thin faces are caught.
    const auto try_sample = [&](Point2 s) {
        const double margin = sign_margin(s);
        std::vector<std::int8_t> sig(k);
        for (int l = 0; l < k; ++l) {
            const double sd = arr.lines[l].signed_dist(s);
            if (std::abs(sd) < margin) return;
            sig[l] = sd > 0.0 ? 1 : -1;
        }
        if (arr.face_by_signs_.emplace(sig, static_cast<int>(arr.faces.size())).second) {
            ArrFace f;
            f.signs = sig;
            f.rep = s;
            arr.faces.push_back(std::move(f));
        }
    };

    for (int l = 0; l < k; ++l) {
        const Line& ln = arr.lines[l];
        std::vector<double> ts;
        for (const auto& [t, v] : on_line[l]) ts.push_back(t);
        std::vector<double> sample_params;
        std::vector<double> gaps;
        if (ts.empty()) {
            sample_params = {0.0};
            gaps = {1.0};
        } else {
            const double span = ts.back() - ts.front();
            const double reach = std::max(1.0, span);
            sample_params.push_back(ts.front() - reach);
            gaps.push_back(reach);
            for (std::size_t t = 0; t + 1 < ts.size(); ++t) {
                if (ts[t + 1] - ts[t] <= 0.0) continue;
                sample_params.push_back(0.5 * (ts[t] + ts[t + 1]));
                gaps.push_back(0.5 * (ts[t + 1] - ts[t]));
            }
            sample_params.push_back(ts.back() + reach);
            gaps.push_back(reach);
        }
        for (std::size_t s = 0; s < sample_params.size(); ++s) {
            const Point2 m = ln.at(sample_params[s]);
            for (const double scale : {0.25, 1e-2, 1e-4, 1e-6}) {
                const double eps = gaps[s] * scale;
                try_sample({m.x + eps * ln.a, m.y + eps * ln.b});
                try_sample({m.x - eps * ln.a, m.y - eps * ln.b});
            }
        }
    }

    // Representative points: clip a large box by the face's half-planes and
    // take the centroid; robust for unbounded faces.
    double lo_x = 0.0, lo_y = 0.0, hi_x = 0.0, hi_y = 0.0;
    bool first = true;
    const auto grow = [&](Point2 p) {
        if (first) {
            lo_x = hi_x = p.x;
            lo_y = hi_y = p.y;
            first = false;
            return;
        }
        lo_x = std::min(lo_x, p.x);
        hi_x = std::max(hi_x, p.x);
        lo_y = std::min(lo_y, p.y);
        hi_y = std::max(hi_y, p.y);
    };
    for (const auto& v : arr.vertices) grow(v.p);
    for (const auto& l : arr.lines) grow(l.base());
    const double margin = 10.0 * std::max({1.0, hi_x - lo_x, hi_y - lo_y});
    const ClipBox box{lo_x - margin, lo_y - margin, hi_x + margin, hi_y + margin};

    for (ArrFace& f : arr.faces) {
        std::vector<Point2> poly = box.polygon();
        for (int l = 0; l < k && !poly.empty(); ++l) {
            const double s = static_cast<double>(f.signs[l]);
            poly = clip_halfplane(poly, s * arr.lines[l].a, s * arr.lines[l].b,
                                  s * arr.lines[l].c);
        }
        if (poly.size() >= 3) {
            const Point2 c = polygon_centroid(poly);
            // Keep the centroid only if it is unambiguously inside.
            bool ok = true;
            for (int l = 0; l < k; ++l) {
                if (f.signs[l] * arr.lines[l].signed_dist(c) < sign_margin(c)) {
                    ok = false;
                    break;
                }
            }
            if (ok) f.rep = c;
            f.bounded = true;
            for (const Point2& p : poly) {
                if (std::abs(p.x - box.lo_x) < 1e-6 * margin ||
                    std::abs(p.x - box.hi_x) < 1e-6 * margin ||
                    std::abs(p.y - box.lo_y) < 1e-6 * margin ||
                    std::abs(p.y - box.hi_y) < 1e-6 * margin) {
                    f.bounded = false;
                    break;
                }
            }
        }
    }
    return arr;
}

void label_outer_cells(Arrangement& arr, const std::vector<Point2>& sites, const Hull& hull) {
    const int n = static_cast<int>(sites.size());
    const DistanceSpec spec = DistanceSpec::make(DistanceKind::ViewAngle);
    for (ArrFace& f : arr.faces) {
        f.label.reset();
        f.label_tied = false;
        if (classify_against_hull(hull, sites, f.rep) != HullSide::Outside) continue;

        double best = -1.0;
        SitePair best_pair{-1, -1};
        bool tied = false;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const DistanceValue dv = eval(spec, f.rep, sites[i], sites[j]);
                if (!dv.defined) continue;
                if (best_pair.i < 0 || dv.value > best * (1.0 + 1e-12)) {
                    best = dv.value;
                    best_pair = {i, j};
                    tied = false;
                } else if (dv.value >= best * (1.0 - 1e-12)) {
                    tied = true;
                }
            }
        }
        if (best_pair.i >= 0) {
            f.label = best_pair;
            f.label_tied = tied;
        }
    }
}

void write_svg(std::ostream& out, const Arrangement& arr) {
    double lo_x = -1, lo_y = -1, hi_x = 1, hi_y = 1;
    if (!arr.vertices.empty()) {
        lo_x = hi_x = arr.vertices[0].p.x;
        lo_y = hi_y = arr.vertices[0].p.y;
        for (const auto& v : arr.vertices) {
            lo_x = std::min(lo_x, v.p.x);
            hi_x = std::max(hi_x, v.p.x);
            lo_y = std::min(lo_y, v.p.y);
            hi_y = std::max(hi_y, v.p.y);
        }
    }
    for (const auto& l : arr.lines) {
        lo_x = std::min(lo_x, l.base().x);
        hi_x = std::max(hi_x, l.base().x);
        lo_y = std::min(lo_y, l.base().y);
        hi_y = std::max(hi_y, l.base().y);
    }
    const double pad = 0.35 * std::max({1.0, hi_x - lo_x, hi_y - lo_y});
    lo_x -= pad;
    hi_x += pad;
    lo_y -= pad;
    hi_y += pad;
    const double w = hi_x - lo_x, h = hi_y - lo_y;
    const double px = 800.0 / std::max(w, h);
    const auto X = [&](double x) { return (x - lo_x) * px; };
    const auto Y = [&](double y) { return (hi_y - y) * px; };  // y up

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w * px << "\" height=\""
        << h * px << "\" viewBox=\"0 0 " << w * px << " " << h * px << "\">\n";
    const ClipBox box{lo_x, lo_y, hi_x, hi_y};
    for (const Line& l : arr.lines) {
        // Clip the infinite line to the viewport.
        std::vector<Point2> poly = box.polygon();
        std::vector<double> tvals;
        const Point2 o = l.base(), d = l.direction();
        const int nb = static_cast<int>(poly.size());
        for (int i = 0; i < nb; ++i) {
            const Point2 p = poly[i], q = poly[(i + 1) % nb];
            const double fp = l.signed_dist(p), fq = l.signed_dist(q);
            if ((fp > 0) != (fq > 0)) {
                const double t = fp / (fp - fq);
                const Point2 z{p.x + t * (q.x - p.x), p.y + t * (q.y - p.y)};
                tvals.push_back(dot(z - o, d));
            }
        }
        if (tvals.size() < 2) continue;
        const auto [mn, mx] = std::minmax_element(tvals.begin(), tvals.end());
        const Point2 s = l.at(*mn), e = l.at(*mx);
        out << "  <line x1=\"" << X(s.x) << "\" y1=\"" << Y(s.y) << "\" x2=\"" << X(e.x)
            << "\" y2=\"" << Y(e.y) << "\" stroke=\"#333\" stroke-width=\"1\"/>\n";
    }
    for (const auto& v : arr.vertices)
        out << "  <circle cx=\"" << X(v.p.x) << "\" cy=\"" << Y(v.p.y)
            << "\" r=\"2.5\" fill=\"#c00\"/>\n";
    for (const auto& f : arr.faces) {
        if (!f.label) continue;
        // Anchor the label inside the visible part of the face.
        std::vector<Point2> poly = box.polygon();
        for (std::size_t l = 0; l < arr.lines.size() && !poly.empty(); ++l) {
            const double s = static_cast<double>(f.signs[l]);
            poly = clip_halfplane(poly, s * arr.lines[l].a, s * arr.lines[l].b,
                                  s * arr.lines[l].c);
        }
        if (poly.size() < 3) continue;
        const Point2 anchor = polygon_centroid(poly);
        out << "  <text x=\"" << X(anchor.x) << "\" y=\"" << Y(anchor.y)
            << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#06c\">(" << f.label->i << ","
            << f.label->j << ")" << (f.label_tied ? "*" : "") << "</text>\n";
    }
    out << "</svg>\n";
}

void write_svg_file(const std::string& path, const Arrangement& arr) {
    std::ofstream f(path);
    if (!f) throw GeometryError("cannot open output file: " + path);
    write_svg(f, arr);
}

}  // namespace bisite
