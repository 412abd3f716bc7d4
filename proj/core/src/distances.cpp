#include "bisite/distances.hpp"

#include <algorithm>

namespace bisite {

std::string kind_name(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::Circumradius: return "circumradius";
        case DistanceKind::ContainingRadius: return "containing";
        case DistanceKind::ViewAngle: return "viewangle";
        case DistanceKind::InscribedRadius: return "inradius";
        case DistanceKind::CccSegmentDist: return "ccc-dist";
        case DistanceKind::CccArea: return "ccc-area";
        case DistanceKind::CccPerimeter: return "ccc-perimeter";
        case DistanceKind::ParamPerimeter: return "param-perimeter";
    }
    return "?";
}

std::optional<DistanceKind> kind_from_name(const std::string& name) {
    if (name == "circumradius") return DistanceKind::Circumradius;
    if (name == "containing") return DistanceKind::ContainingRadius;
    if (name == "viewangle") return DistanceKind::ViewAngle;
    if (name == "inradius") return DistanceKind::InscribedRadius;
    if (name == "ccc-dist") return DistanceKind::CccSegmentDist;
    if (name == "ccc-area") return DistanceKind::CccArea;
    if (name == "ccc-perimeter") return DistanceKind::CccPerimeter;
    if (name == "param-perimeter") return DistanceKind::ParamPerimeter;
    return std::nullopt;
}

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// True if v lies strictly between a and b on their common line. Callers
// guarantee collinearity and v != a, v != b.
bool strictly_between(Point2 v, Point2 a, Point2 b) {
    if (a.x != b.x) return (a.x < v.x) != (b.x < v.x);
    return (a.y < v.y) != (b.y < v.y);
}

DistanceValue eval_circumradius(Point2 v, Point2 p, Point2 q) {
    if (v == p || v == q) return DistanceValue::undefined();
    if (orient_sign(v, p, q) == 0) return DistanceValue::infinite();
    // Rad = |vp| |vq| |pq| / (4 * area)
    const double num = std::sqrt(dist2(v, p) * dist2(v, q) * dist2(p, q));
    const double den = 2.0 * std::abs(cross(p - v, q - v));
    return DistanceValue::of(num / den);
}

DistanceValue eval_view_angle(Point2 v, Point2 p, Point2 q) {
    if (v == p || v == q) return DistanceValue::undefined();
    if (orient_sign(v, p, q) == 0)
        return DistanceValue::of(strictly_between(v, p, q) ? kPi : 0.0);
    const double a2 = dist2(v, p);
    const double b2 = dist2(v, q);
    const double c2 = dist2(p, q);
    const double cosv = (a2 + b2 - c2) / (2.0 * std::sqrt(a2 * b2));
    return DistanceValue::of(std::acos(std::clamp(cosv, -1.0, 1.0)));
}

DistanceValue eval_inradius(Point2 v, Point2 p, Point2 q) {
    if (v == p || v == q) return DistanceValue::of(0.0);
    const double area = triangle_area(v, p, q);
    if (area == 0.0) return DistanceValue::of(0.0);
    const double per = dist(v, p) + dist(v, q) + dist(p, q);
    return DistanceValue::of(2.0 * area / per);
}

DistanceValue eval_ccc(DistanceKind kind, Point2 v, Point2 p, Point2 q) {
    if (v == p || v == q) return DistanceValue::undefined();
    if (orient_sign(v, p, q) == 0) return DistanceValue::infinite();
    const Point2 o = circumcircle(v, p, q).center;
    switch (kind) {
        case DistanceKind::CccSegmentDist:
            return DistanceValue::of(point_segment_distance(o, p, q));
        case DistanceKind::CccArea:
            return DistanceValue::of(triangle_area(o, p, q));
        default:
            return DistanceValue::of(dist(o, p) + dist(o, q) + dist(p, q));
    }
}

}  // namespace

DistanceValue eval(const DistanceSpec& spec, Point2 v, Point2 p, Point2 q) {
    if (p == q) throw CoincidentSites("eval: p = q");
    switch (spec.kind) {
        case DistanceKind::Circumradius:
            return eval_circumradius(v, p, q);
        case DistanceKind::ContainingRadius:
            return DistanceValue::of(min_enclosing_circle_3(v, p, q).radius);
        case DistanceKind::ViewAngle:
            return eval_view_angle(v, p, q);
        case DistanceKind::InscribedRadius:
            return eval_inradius(v, p, q);
        case DistanceKind::CccSegmentDist:
        case DistanceKind::CccArea:
        case DistanceKind::CccPerimeter:
            return eval_ccc(spec.kind, v, p, q);
        case DistanceKind::ParamPerimeter:
            return DistanceValue::of(dist(v, p) + dist(v, q) + spec.c * dist(p, q));
    }
    throw GeometryError("eval: unknown distance kind");
}

PairEvaluator::PairEvaluator(const DistanceSpec& spec, Point2 p, Point2 q)
    : kind_(spec.kind), p_(p), q_(q) {
    if (p == q) throw CoincidentSites("eval: p = q");
    pq2_ = dist2(p, q);
    pq_ = std::sqrt(pq2_);
    c_pq_ = spec.c * pq_;
}

DistanceValue PairEvaluator::operator()(Point2 v) const {
    // Each branch mirrors eval()'s formulas operation for operation, with
    // dist(p,q)-derived terms replaced by the hoisted equivalents.
    switch (kind_) {
        case DistanceKind::Circumradius: {
            if (v == p_ || v == q_) return DistanceValue::undefined();
            if (orient_sign(v, p_, q_) == 0) return DistanceValue::infinite();
            const double num = std::sqrt(dist2(v, p_) * dist2(v, q_) * pq2_);
            const double den = 2.0 * std::abs(cross(p_ - v, q_ - v));
            return DistanceValue::of(num / den);
        }
        case DistanceKind::ContainingRadius: {
            if (v == p_) return DistanceValue::of(0.5 * dist(v, q_));
            if (v == q_) return DistanceValue::of(0.5 * dist(v, p_));
            const double e0 = pq2_;
            const double e1 = dist2(v, q_);
            const double e2 = dist2(v, p_);
            int longest = 0;
            double a2 = e0;
            if (e1 > a2) {
                longest = 1;
                a2 = e1;
            }
            if (e2 > a2) {
                longest = 2;
                a2 = e2;
            }
            const double rest = e0 + e1 + e2 - a2;
            if (a2 > rest * (1.0 + 1e-9) || orient_sign(v, p_, q_) == 0) {
                if (longest == 0) return DistanceValue::of(0.5 * pq_);
                return DistanceValue::of(0.5 * std::sqrt(longest == 1 ? e1 : e2));
            }
            return DistanceValue::of(circumcircle(v, p_, q_).radius);
        }
        case DistanceKind::ViewAngle: {
            if (v == p_ || v == q_) return DistanceValue::undefined();
            if (orient_sign(v, p_, q_) == 0)
                return DistanceValue::of(strictly_between(v, p_, q_) ? kPi : 0.0);
            const double a2 = dist2(v, p_);
            const double b2 = dist2(v, q_);
            const double cosv = (a2 + b2 - pq2_) / (2.0 * std::sqrt(a2 * b2));
            return DistanceValue::of(std::acos(std::clamp(cosv, -1.0, 1.0)));
        }
        case DistanceKind::InscribedRadius: {
            if (v == p_ || v == q_) return DistanceValue::of(0.0);
            const double area = triangle_area(v, p_, q_);
            if (area == 0.0) return DistanceValue::of(0.0);
            const double per = dist(v, p_) + dist(v, q_) + pq_;
            return DistanceValue::of(2.0 * area / per);
        }
        case DistanceKind::CccSegmentDist:
        case DistanceKind::CccArea: {
            if (v == p_ || v == q_) return DistanceValue::undefined();
            if (orient_sign(v, p_, q_) == 0) return DistanceValue::infinite();
            const Point2 o = circumcircle(v, p_, q_).center;
            if (kind_ == DistanceKind::CccSegmentDist)
                return DistanceValue::of(point_segment_distance(o, p_, q_));
            return DistanceValue::of(triangle_area(o, p_, q_));
        }
        case DistanceKind::CccPerimeter: {
            if (v == p_ || v == q_) return DistanceValue::undefined();
            if (orient_sign(v, p_, q_) == 0) return DistanceValue::infinite();
            const Point2 o = circumcircle(v, p_, q_).center;
            return DistanceValue::of(dist(o, p_) + dist(o, q_) + pq_);
        }
        case DistanceKind::ParamPerimeter:
            return DistanceValue::of(dist(v, p_) + dist(v, q_) + c_pq_);
    }
    throw GeometryError("eval: unknown distance kind");
}

}  // namespace bisite
