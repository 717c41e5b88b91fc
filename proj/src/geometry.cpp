#include "geospec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace geospec {

namespace {

void require_binary(const Word& w, const char* what) {
    for (auto s : w)
        if (s > 1) throw std::invalid_argument(std::string(what) + ": non-binary symbol");
}

Word xor_words(const Word& u, const Word& v) {
    Word out(u.size());
    for (std::size_t t = 0; t < u.size(); ++t) out[t] = u[t] ^ v[t];
    return out;
}

}  // namespace

BipolarWord bpsk_modulate(const Word& c) {
    require_binary(c, "bpsk_modulate");
    Eigen::VectorXd s(static_cast<Eigen::Index>(c.size()));
    for (std::size_t t = 0; t < c.size(); ++t) s[static_cast<Eigen::Index>(t)] = 1.0 - 2.0 * c[t];
    return BipolarWord{std::move(s)};
}

double euclid_from_hamming(int d) {
    if (d < 0) throw std::invalid_argument("euclid_from_hamming: negative distance");
    return 2.0 * std::sqrt(static_cast<double>(d));
}

double triangle_cosine(const TriangleConfig& cfg) {
    if (cfg.d1 <= 0 || cfg.i <= 0)
        throw std::invalid_argument("triangle_cosine: undefined direction (d1 or i is zero)");
    const double c = (cfg.d1 + cfg.i - cfg.j) /
                     (2.0 * std::sqrt(static_cast<double>(cfg.d1) * cfg.i));
    return std::clamp(c, -1.0, 1.0);
}

bool is_non_obtuse(const TriangleConfig& cfg) {
    return cfg.d1 + cfg.i >= cfg.j && cfg.d1 + cfg.j >= cfg.i && cfg.i + cfg.j >= cfg.d1;
}

namespace {

// Doubled Gram matrix of the difference vectors to s1, s2, s in d-units;
// integer-exact, so realizability (PSD) is decided without tolerances.
struct DoubledGram {
    std::int64_t g11, g22, g33, g12, g13, g23;
};

DoubledGram doubled_gram(const TetrahedronConfig& c) {
    return {2LL * c.d1, 2LL * c.d2,          2LL * c.i,
            static_cast<std::int64_t>(c.d1) + c.d2 - c.d12,
            static_cast<std::int64_t>(c.d1) + c.i - c.j,
            static_cast<std::int64_t>(c.d2) + c.i - c.h};
}

std::int64_t det3(const DoubledGram& g) {
    return g.g11 * (g.g22 * g.g33 - g.g23 * g.g23) - g.g12 * (g.g12 * g.g33 - g.g23 * g.g13) +
           g.g13 * (g.g12 * g.g23 - g.g22 * g.g13);
}

bool is_psd(const DoubledGram& g) {
    if (g.g11 < 0 || g.g22 < 0 || g.g33 < 0) return false;
    if (g.g11 * g.g22 - g.g12 * g.g12 < 0) return false;
    if (g.g11 * g.g33 - g.g13 * g.g13 < 0) return false;
    if (g.g22 * g.g33 - g.g23 * g.g23 < 0) return false;
    return det3(g) >= 0;
}

}  // namespace

AngleSet tetra_angles(const TetrahedronConfig& cfg) {
    if (cfg.d1 < 1 || cfg.d2 < 1 || cfg.i < 1)
        throw std::invalid_argument("tetra_angles: d1, d2, i must be >= 1");
    const DoubledGram g = doubled_gram(cfg);
    if (!is_psd(g))
        throw std::invalid_argument("tetra_angles: distance tuple is not realizable");

    // Gram-Schmidt in d-units (angles are scale invariant): v1 along xi1,
    // v2 in the first quadrant, v in the first octant.
    const double d1 = cfg.d1, d2 = cfg.d2, i = cfg.i;
    const double m12 = 0.5 * g.g12, m13 = 0.5 * g.g13, m23 = 0.5 * g.g23;
    const double x2 = m12 / std::sqrt(d1);
    const double y2sq = d2 - x2 * x2;
    const double x3 = m13 / std::sqrt(d1);
    const double scale = std::max({d1, d2, i});

    double y3, z3sq;
    if (y2sq <= 1e-9 * scale) {
        // s2 collinear with s1: the xi2 direction is free, put s in the plane
        y3 = std::sqrt(std::max(0.0, i - x3 * x3));
        z3sq = 0.0;
    } else {
        y3 = (m23 - x2 * x3) / std::sqrt(y2sq);
        z3sq = i - x3 * x3 - y3 * y3;
    }
    const double y2 = std::sqrt(std::max(0.0, y2sq));
    const double z3 = std::sqrt(std::max(0.0, z3sq));

    AngleSet a;
    a.theta = std::atan2(y2, x2);
    a.alpha = std::atan2(y3, x3);
    a.phi = std::acos(std::clamp(z3 / std::sqrt(i), -1.0, 1.0));
    return a;
}

AngleSet tetra_angles_law_of_cosines(const TetrahedronConfig& cfg) {
    if (cfg.d1 < 1 || cfg.d2 < 1 || cfg.i < 1)
        throw std::invalid_argument("tetra_angles_law_of_cosines: d1, d2, i must be >= 1");
    const double d1 = cfg.d1, d2 = cfg.d2, i = cfg.i;
    const double ct = (d1 + d2 - cfg.d12) / (2.0 * std::sqrt(d1 * d2));
    const double theta = std::acos(std::clamp(ct, -1.0, 1.0));
    const double st = std::sin(theta);
    const double u = i + d1 - cfg.j;   // 2 sqrt(d1 i) cos(angle s1-s0-s)
    const double v = i + d2 - cfg.h;   // 2 sqrt(d2 i) cos(angle s2-s0-s)

    const double alpha_num =
        std::sqrt(std::max(0.0, u * u * ct * ct + d1 * v * v / d2 -
                                    2.0 * std::sqrt(d1) * ct * u * v / std::sqrt(d2)));
    const double alpha = std::atan2(alpha_num, u * st);

    // The radical equals 2 sqrt(i) sin(theta) cos(phi) for the colatitude phi
    // of Lemma 2's parametrization (sin phi cos alpha, sin phi sin alpha,
    // cos phi), so phi is the arccos of the printed ratio, not its arcsin.
    const double phi_num = std::sqrt(
        std::max(0.0, 4.0 * i * st * st - u * u / d1 - v * v / d2 +
                          2.0 * ct * u * v / std::sqrt(d1 * d2)));
    const double phi = std::acos(std::clamp(phi_num / (2.0 * std::sqrt(i) * st), -1.0, 1.0));
    return AngleSet{theta, alpha, phi};
}

ReconstructedDistances reconstruct_distances(const AngleSet& a, double d1, double d2, double i) {
    const Eigen::Vector3d p1 = 2.0 * std::sqrt(d1) * Eigen::Vector3d(1, 0, 0);
    const Eigen::Vector3d p2 =
        2.0 * std::sqrt(d2) * Eigen::Vector3d(std::cos(a.theta), std::sin(a.theta), 0);
    const Eigen::Vector3d p3 =
        2.0 * std::sqrt(i) * Eigen::Vector3d(std::sin(a.phi) * std::cos(a.alpha),
                                             std::sin(a.phi) * std::sin(a.alpha),
                                             std::cos(a.phi));
    // squared Euclidean distance / 4 = Hamming distance
    return {0.25 * (p1 - p2).squaredNorm(), 0.25 * (p1 - p3).squaredNorm(),
            0.25 * (p2 - p3).squaredNorm()};
}

std::optional<Word> complete_rectangle(const Word& c1, const Word& c) {
    if (c1.size() != c.size())
        throw std::invalid_argument("complete_rectangle: length mismatch");
    require_binary(c1, "complete_rectangle");
    require_binary(c, "complete_rectangle");
    const int w1 = hamming_weight(c1);
    const int w = hamming_weight(c);
    if (w1 == 0 || w == 0) return std::nullopt;
    Word sum = xor_words(c1, c);
    if (hamming_weight(sum) != w1 + w) return std::nullopt;   // supports overlap
    return sum;
}

QuadrupleShape classify_quadruple(const Word& c1, const Word& c2, const Word& c3) {
    require_binary(c1, "classify_quadruple");
    require_binary(c2, "classify_quadruple");
    require_binary(c3, "classify_quadruple");
    const int w1 = hamming_weight(c1), w2 = hamming_weight(c2), w3 = hamming_weight(c3);
    const int d12 = hamming_distance(c1, c2);
    const int d13 = hamming_distance(c1, c3);
    const int d23 = hamming_distance(c2, c3);
    if (w1 == 0 || w2 == 0 || w3 == 0 || d12 == 0 || d13 == 0 || d23 == 0)
        throw std::invalid_argument("classify_quadruple: fewer than 4 distinct points");

    const DoubledGram g = {2LL * w1, 2LL * w2,
                           2LL * w3, static_cast<std::int64_t>(w1) + w2 - d12,
                           static_cast<std::int64_t>(w1) + w3 - d13,
                           static_cast<std::int64_t>(w2) + w3 - d23};
    if (!is_psd(g))
        throw std::runtime_error("classify_quadruple: distances are not realizable");
    if (det3(g) > 0) return QuadrupleShape::Tetrahedron;

    // coplanar: one of the three points must be the diagonal vertex
    struct Labeling {
        int wu, wv, ww, duv, duw, dvw;
    };
    const Labeling labelings[3] = {
        {w1, w2, w3, d12, d13, d23},   // c3 diagonal
        {w1, w3, w2, d13, d12, d23},   // c2 diagonal
        {w2, w3, w1, d23, d12, d13},   // c1 diagonal
    };
    for (const auto& l : labelings) {
        if (l.ww == l.wu + l.wv && l.duv == l.ww && l.duw == l.wv && l.dvw == l.wu)
            return QuadrupleShape::Rectangle;
    }
    throw std::runtime_error(
        "classify_quadruple: coplanar quadruple is not a rectangle (input is not from a "
        "linear code)");
}

}  // namespace geospec
