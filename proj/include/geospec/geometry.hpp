// BPSK embedding and the Euclidean geometry of codeword triples/quadruples:
// angles, non-obtuseness, rectangle completion, tetrahedron classification.
#ifndef GEOSPEC_GEOMETRY_HPP
#define GEOSPEC_GEOMETRY_HPP

#include <optional>

#include <Eigen/Dense>

#include "geospec/code.hpp"

namespace geospec {

struct BipolarWord {
    Eigen::VectorXd signals;   // entries in {-1, +1}, squared norm = n
};

/// Entrywise 0 -> +1, 1 -> -1. Binary symbols only.
BipolarWord bpsk_modulate(const Word& c);

/// Euclidean distance between bipolar images at Hamming distance d: 2*sqrt(d).
double euclid_from_hamming(int d);

/// Distances (c0,c1) = d1, (c0,c) = i, (c1,c) = j.
struct TriangleConfig {
    int d1, i, j;
};

/// Pairwise Hamming distances among {c0, c1, c2, c}:
/// d1 = (c0,c1), d2 = (c0,c2), d12 = (c1,c2), i = (c0,c), j = (c1,c), h = (c2,c).
struct TetrahedronConfig {
    int d1, d2, d12, i, j, h;
};

/// theta: azimuth of s2; alpha: azimuth of s; phi: colatitude of s, all in the
/// coordinate system with xi1 along s1, s2 in the first quadrant, s in the
/// first octant.
struct AngleSet {
    double theta, alpha, phi;
};

/// cos of the angle at s0 between the directions to s1 and to s, clamped to
/// [-1, 1]. Throws when d1 = 0 or i = 0.
double triangle_cosine(const TriangleConfig& cfg);

/// True iff all three vertex angles are <= pi/2.
bool is_non_obtuse(const TriangleConfig& cfg);

/// Angles via orthonormalization of the distance-derived Gram matrix.
/// Throws std::invalid_argument when the configuration is not realizable.
AngleSet tetra_angles(const TetrahedronConfig& cfg);

/// The law-of-cosines closed forms for the same angles. Numerically fragile
/// near right angles; kept as a cross-check for tetra_angles.
AngleSet tetra_angles_law_of_cosines(const TetrahedronConfig& cfg);

/// Pairwise distances implied by an AngleSet and the three origin distances,
/// for the reconstruction invariant: returns (d12, j, h).
struct ReconstructedDistances {
    double d12, j, h;
};
ReconstructedDistances reconstruct_distances(const AngleSet& a, double d1, double d2, double i);

/// If c1 and c have disjoint supports (right angle at the origin), returns the
/// fourth vertex c1 + c completing the rectangle; otherwise nullopt.
std::optional<Word> complete_rectangle(const Word& c1, const Word& c);

enum class QuadrupleShape { Rectangle, Tetrahedron };

/// Classifies {0, c1, c2, c3}. Coplanar quadruples must be rectangles
/// (consistency error otherwise); anything of full rank is a tetrahedron.
QuadrupleShape classify_quadruple(const Word& c1, const Word& c2, const Word& c3);

}  // namespace geospec

#endif
