#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "confspace/exact.hpp"
#include "confspace/rng.hpp"
#include "confspace/tolerance.hpp"

namespace confspace {

enum class Ambient { Euclidean, Sphere, Projective };

std::string ambient_name(Ambient a);
Ambient ambient_from_name(const std::string& s);

/// The space W_{k,n}(M): n-tuples of points of M with every k of them
/// linearly independent. For Sphere/Projective, m is the manifold dimension
/// and coordinates live in R^{m+1}; for Euclidean, m is the coordinate
/// dimension itself.
struct SpaceSpec {
    Ambient ambient = Ambient::Sphere;
    int m = 1;
    int k = 1;
    int n = 1;

    SpaceSpec() = default;
    SpaceSpec(Ambient a, int m_, int k_, int n_);

    static SpaceSpec sphere(int m, int k, int n) { return {Ambient::Sphere, m, k, n}; }
    static SpaceSpec projective(int m, int k, int n) { return {Ambient::Projective, m, k, n}; }
    static SpaceSpec euclidean(int d, int k, int n) { return {Ambient::Euclidean, d, k, n}; }

    /// W_{k,n} = W_{n,n} when n < k: clamps k instead of rejecting.
    static SpaceSpec normalized(Ambient a, int m, int k, int n);

    int coord_dim() const { return ambient == Ambient::Euclidean ? m : m + 1; }

    SpaceSpec with_n(int new_n) const { return {ambient, m, k, new_n}; }
    SpaceSpec with_k(int new_k) const { return {ambient, m, new_k, n}; }

    bool operator==(const SpaceSpec&) const = default;
    std::string str() const;
};

/// A point of the ambient space. Projective points are stored in canonical
/// form (unit norm, first coordinate of magnitude > eps positive), so that
/// projective equality is coordinate comparison. The optional exact
/// representation carries rational coordinates for Exact-mode rank tests;
/// for projective points it is kept up to positive scale only.
struct Point {
    Eigen::VectorXd coords;
    std::optional<RationalVector> exact;

    Point() = default;
    explicit Point(Eigen::VectorXd c) : coords(std::move(c)) {}
    Point(Eigen::VectorXd c, RationalVector e) : coords(std::move(c)), exact(std::move(e)) {}
    static Point from_exact(RationalVector e);

    int dim() const { return static_cast<int>(coords.size()); }
    bool is_exact() const { return exact.has_value(); }
};

Point basis_point(int dim, int axis, double sign = 1.0);

/// Canonicalize a projective representative in place: unit norm, first
/// coordinate with |c| > eps_norm made positive. Throws on zero vectors.
void canonicalize_projective(Point& p, double eps_norm);

/// Ambient invariant check (unit norm on spheres, nonzero canonical form on
/// projective space). Throws InputError on violation.
void validate_point(const SpaceSpec& spec, const Point& p, const Tolerance& tol);

class Configuration {
public:
    Configuration() = default;
    /// Validates lengths and ambient invariants; canonicalizes projective
    /// representatives.
    Configuration(SpaceSpec spec, std::vector<Point> points, const Tolerance& tol = {});

    const SpaceSpec& spec() const { return spec_; }
    const std::vector<Point>& points() const { return points_; }
    const Point& point(int i) const { return points_.at(static_cast<std::size_t>(i)); }
    int size() const { return static_cast<int>(points_.size()); }

    /// coord_dim x n matrix, points as columns.
    Eigen::MatrixXd matrix() const;
    bool all_exact() const;

    /// Max coordinate (sup-norm) distance to another configuration.
    double distance(const Configuration& other) const;

private:
    SpaceSpec spec_;
    std::vector<Point> points_;
};

/// Numerical (or exact) rank of a set of coordinate vectors.
int rank(const std::vector<Eigen::VectorXd>& vectors, const Tolerance& tol = {});
int rank(const Eigen::MatrixXd& columns, const Tolerance& tol = {});
int rank_of_points(const std::vector<const Point*>& pts, const Tolerance& tol);

/// True iff every k-subset of the n points has rank k.
bool is_member(const Configuration& c, const Tolerance& tol = {});

/// Canonical base points: b_k = (e_1,...,e_k) for n = k; b~_k with the
/// normalized sum appended for n = k+1; the projective frame
/// ([e_1],...,[e_{m+1}],[e_1+...+e_{m+1}]) for k = m+1, n = m+2.
Configuration canonical_base(const SpaceSpec& spec);

/// Gram-Schmidt orthonormalization of a member of W_{n,n}(S^m), n <= m+1.
/// Preserves the flag of partial spans and keeps <p_j, p'_j> > 0.
Configuration gram_schmidt(const Configuration& c, const Tolerance& tol = {});

/// One rejection-sampled member; deterministic under fixed seed.
Configuration sample(const SpaceSpec& spec, std::uint64_t seed, int max_tries = 1000,
                     const Tolerance& tol = {});

/// Raw ambient point (no membership constraint), advancing the generator.
Point sample_point(const SpaceSpec& spec, Rng& rng);

/// Raw n-tuple with valid points but no independence constraint.
Configuration sample_raw(const SpaceSpec& spec, Rng& rng, const Tolerance& tol = {});

} // namespace confspace
