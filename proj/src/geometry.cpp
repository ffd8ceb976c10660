#include "confspace/geometry.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/SVD>

namespace confspace {

std::string ambient_name(Ambient a) {
    switch (a) {
        case Ambient::Euclidean: return "euclidean";
        case Ambient::Sphere: return "sphere";
        case Ambient::Projective: return "rp";
    }
    return "?";
}

Ambient ambient_from_name(const std::string& s) {
    if (s == "euclidean" || s == "rn") return Ambient::Euclidean;
    if (s == "sphere") return Ambient::Sphere;
    if (s == "rp" || s == "projective") return Ambient::Projective;
    throw InputError("unknown ambient '" + s + "' (expected euclidean|sphere|rp)");
}

SpaceSpec::SpaceSpec(Ambient a, int m_, int k_, int n_) : ambient(a), m(m_), k(k_), n(n_) {
    if (m < 1) throw InputError("SpaceSpec: dimension must be >= 1");
    if (k < 1) throw InputError("SpaceSpec: k must be >= 1");
    if (n < k)
        throw InputError("SpaceSpec: n < k rejected; use SpaceSpec::normalized for the "
                         "W_{k,n} = W_{n,n} convention");
}

SpaceSpec SpaceSpec::normalized(Ambient a, int m, int k, int n) {
    return SpaceSpec(a, m, std::min(k, n), n);
}

std::string SpaceSpec::str() const {
    std::string s = "W_{" + std::to_string(k) + "," + std::to_string(n) + "}(";
    switch (ambient) {
        case Ambient::Euclidean: s += "R^" + std::to_string(m); break;
        case Ambient::Sphere: s += "S^" + std::to_string(m); break;
        case Ambient::Projective: s += "RP^" + std::to_string(m); break;
    }
    return s + ")";
}

Point Point::from_exact(RationalVector e) {
    Eigen::VectorXd c(static_cast<Eigen::Index>(e.size()));
    for (std::size_t i = 0; i < e.size(); ++i) c[static_cast<Eigen::Index>(i)] = to_double(e[i]);
    return Point(std::move(c), std::move(e));
}

Point basis_point(int dim, int axis, double sign) {
    if (axis < 1 || axis > dim) throw InputError("basis_point: axis out of range");
    Eigen::VectorXd c = Eigen::VectorXd::Zero(dim);
    c[axis - 1] = sign;
    RationalVector e(static_cast<std::size_t>(dim), Rational(0));
    e[static_cast<std::size_t>(axis - 1)] = Rational(sign > 0 ? 1 : -1);
    return Point(std::move(c), std::move(e));
}

void canonicalize_projective(Point& p, double eps_norm) {
    const double nrm = p.coords.norm();
    if (nrm <= eps_norm) throw InputError("projective point: zero representative");
    p.coords /= nrm;
    double lead = 0.0;
    for (Eigen::Index i = 0; i < p.coords.size(); ++i) {
        if (std::abs(p.coords[i]) > eps_norm) {
            lead = p.coords[i];
            break;
        }
    }
    if (lead < 0.0) {
        p.coords = -p.coords;
        if (p.exact)
            for (auto& q : *p.exact) q = -q;
    }
    // exact representative kept up to positive scale; rank tests are
    // scale-invariant.
}

void validate_point(const SpaceSpec& spec, const Point& p, const Tolerance& tol) {
    if (p.dim() != spec.coord_dim())
        throw InputError("point dimension " + std::to_string(p.dim()) + " does not match " +
                         spec.str());
    if (p.exact && p.exact->size() != static_cast<std::size_t>(p.dim()))
        throw InputError("exact coordinates disagree with float dimension");
    switch (spec.ambient) {
        case Ambient::Euclidean: break;
        case Ambient::Sphere:
            if (std::abs(p.coords.norm() - 1.0) > tol.eps_norm)
                throw InputError("sphere point is not unit norm");
            break;
        case Ambient::Projective:
            if (p.coords.norm() <= tol.eps_norm)
                throw InputError("projective point: zero representative");
            break;
    }
}

Configuration::Configuration(SpaceSpec spec, std::vector<Point> points, const Tolerance& tol)
    : spec_(spec), points_(std::move(points)) {
    if (static_cast<int>(points_.size()) != spec_.n)
        throw InputError("configuration has " + std::to_string(points_.size()) +
                         " points, spec requires n = " + std::to_string(spec_.n));
    for (auto& p : points_) {
        if (spec_.ambient == Ambient::Projective) canonicalize_projective(p, tol.eps_norm);
        validate_point(spec_, p, tol);
    }
}

Eigen::MatrixXd Configuration::matrix() const {
    Eigen::MatrixXd m(spec_.coord_dim(), size());
    for (int j = 0; j < size(); ++j) m.col(j) = points_[static_cast<std::size_t>(j)].coords;
    return m;
}

bool Configuration::all_exact() const {
    return std::all_of(points_.begin(), points_.end(), [](const Point& p) { return p.is_exact(); });
}

double Configuration::distance(const Configuration& other) const {
    if (size() != other.size() || spec_.coord_dim() != other.spec_.coord_dim())
        throw InputError("distance: shape mismatch");
    double d = 0.0;
    for (int i = 0; i < size(); ++i)
        d = std::max(d, (points_[static_cast<std::size_t>(i)].coords -
                         other.points_[static_cast<std::size_t>(i)].coords)
                            .lpNorm<Eigen::Infinity>());
    return d;
}

int rank(const Eigen::MatrixXd& columns, const Tolerance& tol) {
    tol.check();
    if (tol.mode == ArithmeticMode::Exact)
        throw InputError("rank: Exact mode requires rational inputs");
    if (columns.size() == 0) return 0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(columns);
    const auto& sv = svd.singularValues();
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv[i] > tol.eps_rank) ++r;
    return r;
}

int rank(const std::vector<Eigen::VectorXd>& vectors, const Tolerance& tol) {
    if (vectors.empty()) return 0;
    const Eigen::Index dim = vectors[0].size();
    Eigen::MatrixXd m(dim, static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t j = 0; j < vectors.size(); ++j) {
        if (vectors[j].size() != dim) throw InputError("rank: dimension mismatch");
        m.col(static_cast<Eigen::Index>(j)) = vectors[j];
    }
    return rank(m, tol);
}

int rank_of_points(const std::vector<const Point*>& pts, const Tolerance& tol) {
    if (pts.empty()) return 0;
    if (tol.mode == ArithmeticMode::Exact) {
        std::vector<RationalVector> rows;
        rows.reserve(pts.size());
        for (const Point* p : pts) {
            if (!p->is_exact())
                throw InputError("Exact mode requires rational coordinates on every point");
            rows.push_back(*p->exact);
        }
        return exact_rank(std::move(rows));
    }
    const Eigen::Index dim = pts[0]->coords.size();
    Eigen::MatrixXd m(dim, static_cast<Eigen::Index>(pts.size()));
    for (std::size_t j = 0; j < pts.size(); ++j) {
        if (pts[j]->coords.size() != dim) throw InputError("rank: dimension mismatch");
        m.col(static_cast<Eigen::Index>(j)) = pts[j]->coords;
    }
    return rank(m, tol);
}

namespace {

// Visits all k-subsets of {0,...,n-1}; stops early when f returns false.
bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!f(idx)) return false;
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return true;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

} // namespace

bool is_member(const Configuration& c, const Tolerance& tol) {
    const int n = c.spec().n;
    const int k = c.spec().k;
    return for_each_subset(n, k, [&](const std::vector<int>& idx) {
        std::vector<const Point*> pts;
        pts.reserve(idx.size());
        for (int i : idx) pts.push_back(&c.point(i));
        return rank_of_points(pts, tol) == k;
    });
}

Configuration canonical_base(const SpaceSpec& spec) {
    const int dim = spec.coord_dim();
    const int k = spec.k;
    auto frame = [&](int count) {
        std::vector<Point> pts;
        pts.reserve(static_cast<std::size_t>(count));
        for (int i = 1; i <= count; ++i) pts.push_back(basis_point(dim, i));
        return pts;
    };
    if (k > dim)
        throw UnsupportedError("canonical_base: " + spec.str() + " needs k <= " +
                               std::to_string(dim) + " coordinates");

    if (spec.n == k) {
        return Configuration(spec, frame(k));
    }
    if (spec.n == k + 1) {
        // b~_k: append the normalized sum (e_1+...+e_k)/||e_1+...+e_k||.
        std::vector<Point> pts = frame(k);
        Eigen::VectorXd s = Eigen::VectorXd::Zero(dim);
        for (int i = 0; i < k; ++i) s[i] = 1.0;
        if (spec.ambient == Ambient::Projective) {
            RationalVector e(static_cast<std::size_t>(dim), Rational(0));
            for (int i = 0; i < k; ++i) e[static_cast<std::size_t>(i)] = 1;
            pts.emplace_back(s, std::move(e)); // canonicalized by the constructor
        } else if (spec.ambient == Ambient::Sphere) {
            pts.emplace_back(Eigen::VectorXd(s / s.norm()));
        } else {
            pts.emplace_back(std::move(s));
        }
        return Configuration(spec, std::move(pts));
    }
    throw UnsupportedError("canonical_base: no canonical point for " + spec.str());
}

Configuration gram_schmidt(const Configuration& c, const Tolerance& tol) {
    const SpaceSpec& s = c.spec();
    if (s.ambient != Ambient::Sphere)
        throw UnsupportedError("gram_schmidt is defined on sphere configurations");
    if (s.k != s.n || s.n > s.m + 1)
        throw UnsupportedError("gram_schmidt requires k = n <= m+1, got " + s.str());

    Eigen::MatrixXd p = c.matrix();
    Eigen::MatrixXd q(p.rows(), p.cols());
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
        Eigen::VectorXd v = p.col(j);
        for (Eigen::Index i = 0; i < j; ++i) v -= q.col(i).dot(p.col(j)) * q.col(i);
        const double nrm = v.norm();
        if (nrm <= tol.eps_rank)
            throw DegenerateInputError("gram_schmidt: dependent input at column " +
                                       std::to_string(j + 1));
        q.col(j) = v / nrm;
    }
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(q.cols()));
    for (Eigen::Index j = 0; j < q.cols(); ++j) out.emplace_back(Eigen::VectorXd(q.col(j)));
    return Configuration(s, std::move(out), tol);
}

Point sample_point(const SpaceSpec& spec, Rng& rng) {
    const int dim = spec.coord_dim();
    while (true) {
        Eigen::VectorXd v(dim);
        for (int i = 0; i < dim; ++i) v[i] = rng.gaussian();
        switch (spec.ambient) {
            case Ambient::Euclidean: return Point(std::move(v));
            case Ambient::Sphere: {
                const double nrm = v.norm();
                if (nrm < 1e-6) continue;
                return Point(Eigen::VectorXd(v / nrm));
            }
            case Ambient::Projective: {
                const double nrm = v.norm();
                if (nrm < 1e-6) continue;
                Point p(Eigen::VectorXd(v / nrm));
                canonicalize_projective(p, 1e-12);
                return p;
            }
        }
    }
}

Configuration sample_raw(const SpaceSpec& spec, Rng& rng, const Tolerance& tol) {
    std::vector<Point> pts;
    pts.reserve(static_cast<std::size_t>(spec.n));
    for (int i = 0; i < spec.n; ++i) pts.push_back(sample_point(spec, rng));
    return Configuration(spec, std::move(pts), tol);
}

Configuration sample(const SpaceSpec& spec, std::uint64_t seed, int max_tries,
                     const Tolerance& tol) {
    if (spec.k > spec.coord_dim())
        throw UnsupportedError("sample: " + spec.str() + " is unsatisfiable (k independent "
                               "vectors need dimension >= k)");
    Rng rng(seed);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        Configuration c = sample_raw(spec, rng, tol);
        if (is_member(c, tol)) return c;
    }
    throw SamplingError("sample: no member of " + spec.str() + " after " +
                        std::to_string(max_tries) + " tries (near-degenerate spec or "
                        "too-tight tolerance?)");
}

} // namespace confspace
