#include "geospec/error_prob.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <thread>

#include "geospec/rng.hpp"

namespace geospec {

NoiseModel::NoiseModel(double s) : sigma(s) {
    if (!(s > 0.0)) throw std::invalid_argument("noise sigma must be positive");
}

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }
double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }
double normal_pdf(double x) {
    return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
}

namespace {

constexpr double kRhoBoundary = 1.0 - 1e-12;

// Gauss-Legendre half-rules used by the bivariate kernel, by |rho| range.
const double kGlX6[3] = {0.9324695142031521, 0.6612093864662645, 0.2386191860831969};
const double kGlW6[3] = {0.1713244923791704, 0.3607615730481386, 0.4679139345726910};
const double kGlX12[6] = {0.9815606342467192, 0.9041172563704749, 0.7699026741943047,
                          0.5873179542866175, 0.3678314989981802, 0.1252334085114689};
const double kGlW12[6] = {0.0471753363865118, 0.1069393259953184, 0.1600783285433462,
                          0.2031674267230659, 0.2334925365383548, 0.2491470458134028};
const double kGlX20[10] = {0.9931285991850949, 0.9639719272779138, 0.9122344282513259,
                           0.8391169718222188, 0.7463319064601508, 0.6360536807265150,
                           0.5108670019508271, 0.3737060887154195, 0.2277858511416451,
                           0.0765265211334973};
const double kGlW20[10] = {0.0176140071391521, 0.0406014298003869, 0.0626720483341091,
                           0.0832767415767048, 0.1019301198172404, 0.1181945319615184,
                           0.1316886384491766, 0.1420961093183820, 0.1491729864726037,
                           0.1527533871307258};

// Genz's bivariate normal upper-orthant probability P(X > dh, Y > dk).
double bvnu(double dh, double dk, double r) {
    const double twopi = 2.0 * std::numbers::pi;
    double h = dh, k = dk, hk = h * k, bvn = 0.0;
    const double* x;
    const double* w;
    int lg;
    if (std::fabs(r) < 0.3) {
        x = kGlX6;
        w = kGlW6;
        lg = 3;
    } else if (std::fabs(r) < 0.75) {
        x = kGlX12;
        w = kGlW12;
        lg = 6;
    } else {
        x = kGlX20;
        w = kGlW20;
        lg = 10;
    }
    if (std::fabs(r) < 0.925) {
        if (std::fabs(r) > 0.0) {
            const double hs = (h * h + k * k) / 2.0;
            const double asr = std::asin(r);
            for (int i = 0; i < lg; ++i)
                for (int is = -1; is <= 1; is += 2) {
                    const double sn = std::sin(asr * (is * x[i] + 1.0) / 2.0);
                    bvn += w[i] * std::exp((sn * hk - hs) / (1.0 - sn * sn));
                }
            bvn = bvn * asr / (2.0 * twopi);
        }
        bvn += normal_cdf(-h) * normal_cdf(-k);
    } else {
        if (r < 0.0) {
            k = -k;
            hk = -hk;
        }
        if (std::fabs(r) < 1.0) {
            const double as = (1.0 - r) * (1.0 + r);
            double a = std::sqrt(as);
            const double bs = (h - k) * (h - k);
            const double c = (4.0 - hk) / 8.0;
            const double d = (12.0 - hk) / 16.0;
            double asr = -(bs / as + hk) / 2.0;
            if (asr > -100.0)
                bvn = a * std::exp(asr) *
                      (1.0 - c * (bs - as) * (1.0 - d * bs / 5.0) / 3.0 + c * d * as * as / 5.0);
            if (-hk < 100.0) {
                const double b = std::sqrt(bs);
                const double sp = std::sqrt(twopi) * normal_cdf(-b / a);
                bvn -= std::exp(-hk / 2.0) * sp * b * (1.0 - c * bs * (1.0 - d * bs / 5.0) / 3.0);
            }
            a /= 2.0;
            for (int i = 0; i < lg; ++i)
                for (int is = -1; is <= 1; is += 2) {
                    double xs = a * (is * x[i] + 1.0);
                    xs = xs * xs;
                    const double rs = std::sqrt(1.0 - xs);
                    asr = -(bs / xs + hk) / 2.0;
                    if (asr > -100.0) {
                        const double sp = 1.0 + c * xs * (1.0 + d * xs);
                        const double ep =
                            std::exp(-hk * (1.0 - rs) / (2.0 * (1.0 + rs))) / rs;
                        bvn += a * w[i] * std::exp(asr) * (ep - sp);
                    }
                }
            bvn = -bvn / twopi;
        }
        if (r > 0.0) {
            bvn += normal_cdf(-std::max(h, k));
        } else {
            bvn = -bvn;
            if (k > h) bvn += normal_cdf(k) - normal_cdf(h);
        }
    }
    return bvn;
}

// Adaptive Gauss-Kronrod 7/15 with recursive bisection.
const double kGkX[8] = {0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
                        0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
                        0.2077849550078985, 0.0};
const double kGkWk[8] = {0.0229353220105292, 0.0630920926299785, 0.1047900103222502,
                         0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
                         0.2044329400752989, 0.2094821410847278};
const double kGkWg[4] = {0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
                         0.4179591836734694};

struct GkResult {
    double integral;
    double error;
};

GkResult gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double ik = 0.0, ig = 0.0;
    for (int i = 0; i < 8; ++i) {
        if (i == 7) {
            const double fc = f(c);
            ik += kGkWk[7] * fc;
            ig += kGkWg[3] * fc;
            break;
        }
        const double fv1 = f(c - h * kGkX[i]);
        const double fv2 = f(c + h * kGkX[i]);
        ik += kGkWk[i] * (fv1 + fv2);
        if (i % 2 == 1) ig += kGkWg[i / 2] * (fv1 + fv2);
    }
    return {ik * h, std::fabs(ik - ig) * h};
}

double adaptive_quad(const std::function<double(double)>& f, double a, double b, double tol,
                     int depth = 0) {
    const GkResult r = gk15(f, a, b);
    if (r.error < tol || depth > 48) return r.integral;
    const double c = 0.5 * (a + b);
    return adaptive_quad(f, a, c, tol / 2.0, depth + 1) +
           adaptive_quad(f, c, b, tol / 2.0, depth + 1);
}

constexpr double kTailCut = 9.0;   // phi(9) ~ 1e-18, below every target here

}  // namespace

double bvn_cdf(double b1, double b2, double rho) {
    if (rho >= kRhoBoundary) return normal_cdf(std::min(b1, b2));
    if (rho <= -kRhoBoundary) return std::max(0.0, normal_cdf(b1) - normal_cdf(-b2));
    if (b1 > b2) std::swap(b1, b2);   // canonical order: symmetry holds bit-exactly
    return bvnu(-b1, -b2, rho);
}

double tvn_cdf(double b1, double b2, double b3, double r12, double r13, double r23) {
    if (b1 < -kTailCut) return 0.0;
    r12 = std::clamp(r12, -kRhoBoundary, kRhoBoundary);
    r13 = std::clamp(r13, -kRhoBoundary, kRhoBoundary);
    const double s2 = std::sqrt(1.0 - r12 * r12);
    const double s3 = std::sqrt(1.0 - r13 * r13);
    const double rc = std::clamp((r23 - r12 * r13) / (s2 * s3), -1.0, 1.0);
    auto integrand = [&](double t) {
        return normal_pdf(t) * bvn_cdf((b2 - r12 * t) / s2, (b3 - r13 * t) / s3, rc);
    };
    return adaptive_quad(integrand, -kTailCut, std::min(b1, kTailCut), 1e-10);
}

HalfSpaceSystem HalfSpaceSystem::make(std::vector<Eigen::Vector3d> normals,
                                      std::vector<double> offsets) {
    if (normals.empty() || normals.size() > 3 || normals.size() != offsets.size())
        throw std::invalid_argument("half-space system needs 1-3 normals with offsets");
    for (const auto& n : normals)
        if (std::fabs(n.norm() - 1.0) > 1e-12)
            throw std::invalid_argument("half-space normals must be unit length");
    HalfSpaceSystem sys;
    sys.normals_ = std::move(normals);
    sys.offsets_ = std::move(offsets);
    return sys;
}

Eigen::MatrixXd HalfSpaceSystem::correlation() const {
    const int m = count();
    Eigen::MatrixXd r(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) r(i, j) = normals_[i].dot(normals_[j]);
    return r;
}

namespace {

// P(all a_i . w < b_i) for w ~ N(0, I_1): interval on the line.
double reduced_prob_1d(const Eigen::MatrixXd& coeff, const Eigen::VectorXd& b) {
    double lo = -INFINITY, hi = INFINITY;
    for (int i = 0; i < coeff.rows(); ++i) {
        const double a = coeff(i, 0);
        if (std::fabs(a) < 1e-12) {
            if (b(i) <= 0.0) return 0.0;   // constraint 0 < b_i violated
            continue;
        }
        if (a > 0.0)
            hi = std::min(hi, b(i) / a);
        else
            lo = std::max(lo, b(i) / a);
    }
    if (lo >= hi) return 0.0;
    return std::max(0.0, normal_cdf(hi) - normal_cdf(lo));
}

// P(all a_i . w < b_i) for w ~ N(0, I_2): quadrature over the first
// coordinate, interval probability in the second.
double reduced_prob_2d(const Eigen::MatrixXd& coeff, const Eigen::VectorXd& b) {
    double tlo = -kTailCut, thi = kTailCut;
    struct Edge {
        double a, c, b;
    };
    std::vector<Edge> edges;
    for (int i = 0; i < coeff.rows(); ++i) {
        const double a = coeff(i, 0), c = coeff(i, 1);
        if (std::fabs(c) < 1e-12) {
            if (std::fabs(a) < 1e-12) {
                if (b(i) <= 0.0) return 0.0;
            } else if (a > 0.0) {
                thi = std::min(thi, b(i) / a);
            } else {
                tlo = std::max(tlo, b(i) / a);
            }
        } else {
            edges.push_back({a, c, b(i)});
        }
    }
    if (tlo >= thi) return 0.0;
    auto integrand = [&](double t) {
        double lo = -INFINITY, hi = INFINITY;
        for (const Edge& e : edges) {
            const double bound = (e.b - e.a * t) / e.c;
            if (e.c > 0.0)
                hi = std::min(hi, bound);
            else
                lo = std::max(lo, bound);
        }
        if (lo >= hi) return 0.0;
        return normal_pdf(t) * std::max(0.0, normal_cdf(hi) - normal_cdf(lo));
    };
    return adaptive_quad(integrand, tlo, thi, 1e-10);
}

}  // namespace

double mvn_halfspace_prob(const HalfSpaceSystem& sys, const NoiseModel& noise) {
    const int m = sys.count();
    Eigen::VectorXd b(m);
    for (int r = 0; r < m; ++r) b(r) = sys.offset(r) / noise.sigma;

    if (m == 1) return normal_cdf(b(0));
    const Eigen::MatrixXd r = sys.correlation();
    if (m == 2) {
        const double rho = r(0, 1);
        if (rho >= kRhoBoundary) return normal_cdf(b.minCoeff());
        if (rho <= -kRhoBoundary)
            return std::max(0.0, normal_cdf(b(0)) - normal_cdf(-b(1)));
        return bvn_cdf(b(0), b(1), rho);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(r);
    if (eig.info() != Eigen::Success)
        throw std::runtime_error("mvn_halfspace_prob: eigendecomposition failed");
    const Eigen::VectorXd lambda = eig.eigenvalues();   // ascending
    if (lambda(0) < -1e-9)
        throw std::invalid_argument("mvn_halfspace_prob: correlation matrix not PSD");

    int rank = 0;
    for (int i = 0; i < m; ++i)
        if (lambda(i) > 1e-9) ++rank;

    if (rank == m) {
        return tvn_cdf(b(0), b(1), b(2), r(0, 1), r(0, 2), r(1, 2));
    }

    // singular correlation: factor R = L L^T with L m x rank and integrate in
    // the reduced space
    Eigen::MatrixXd coeff(m, rank);
    int col = 0;
    for (int i = 0; i < m; ++i) {
        if (lambda(i) <= 1e-9) continue;
        coeff.col(col++) = eig.eigenvectors().col(i) * std::sqrt(lambda(i));
    }
    if (rank == 1) return reduced_prob_1d(coeff, b);
    return reduced_prob_2d(coeff, b);
}

McEstimate mc_event_prob(const HalfSpaceSystem& sys, const NoiseModel& noise,
                         std::uint64_t samples, std::uint64_t seed, int threads) {
    if (samples < 10000)
        throw std::invalid_argument("mc_event_prob: need at least 1e4 samples");
    if (threads <= 0)
        threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    threads = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), samples));

    const int m = sys.count();
    Eigen::Matrix3d normals = Eigen::Matrix3d::Zero();
    Eigen::Vector3d offsets = Eigen::Vector3d::Zero();
    for (int r = 0; r < m; ++r) {
        normals.row(r) = sys.normal(r);
        offsets(r) = sys.offset(r);
    }

    auto count_hits = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t hits = 0;
        for (std::uint64_t s = begin; s < end; ++s) {
            const CounterStream cs(seed, 0, s);
            const auto z01 = cs.normal_pair(0);
            const auto z23 = cs.normal_pair(1);
            const Eigen::Vector3d z(noise.sigma * z01[0], noise.sigma * z01[1],
                                    noise.sigma * z23[0]);
            bool inside = true;
            for (int r = 0; r < m; ++r)
                inside = inside && (normals.row(r).dot(z) < offsets(r));
            hits += inside;
        }
        return hits;
    };

    std::vector<std::uint64_t> partial(static_cast<std::size_t>(threads), 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = samples / threads;
    for (int t = 0; t < threads; ++t) {
        const std::uint64_t begin = chunk * t;
        const std::uint64_t end = (t == threads - 1) ? samples : chunk * (t + 1);
        pool.emplace_back([&, t, begin, end] { partial[t] = count_hits(begin, end); });
    }
    for (auto& th : pool) th.join();
    std::uint64_t hits = 0;
    for (auto p : partial) hits += p;

    const double est = static_cast<double>(hits) / static_cast<double>(samples);
    const double se = std::sqrt(est * (1.0 - est) / static_cast<double>(samples));
    return {est, se};
}

double pairwise_error_prob(int i, const NoiseModel& noise) {
    if (i < 1) throw std::invalid_argument("pairwise_error_prob: weight must be >= 1");
    return q_function(std::sqrt(static_cast<double>(i)) / noise.sigma);
}

HalfSpaceSystem triplet_halfspaces(int d1, int i, int j) {
    if (d1 < 1 || i < 1)
        throw std::invalid_argument("triplet config: d1 and i must be >= 1");
    if (j == 0 && i != d1)
        throw std::invalid_argument("triplet config: j = 0 requires i = d1");
    const long long lhs = static_cast<long long>(d1) + i - j;
    if (lhs * lhs > 4LL * d1 * i)
        throw std::invalid_argument("triplet config: triangle is not realizable");
    const double ct = triangle_cosine({d1, i, j});
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    return HalfSpaceSystem::make(
        {Eigen::Vector3d(1, 0, 0), Eigen::Vector3d(ct, st, 0)},
        {std::sqrt(static_cast<double>(d1)), std::sqrt(static_cast<double>(i))});
}

double triplet_error_prob(int d1, int i, int j, const NoiseModel& noise) {
    return 1.0 - mvn_halfspace_prob(triplet_halfspaces(d1, i, j), noise);
}

HalfSpaceSystem quadruple_halfspaces(const TetrahedronConfig& cfg) {
    const AngleSet a = tetra_angles(cfg);   // validates realizability
    const Eigen::Vector3d n1(1, 0, 0);
    const Eigen::Vector3d n2(std::cos(a.theta), std::sin(a.theta), 0);
    const Eigen::Vector3d n3(std::sin(a.phi) * std::cos(a.alpha),
                             std::sin(a.phi) * std::sin(a.alpha), std::cos(a.phi));
    return HalfSpaceSystem::make({n1, n2, n3},
                                 {std::sqrt(static_cast<double>(cfg.d1)),
                                  std::sqrt(static_cast<double>(cfg.d2)),
                                  std::sqrt(static_cast<double>(cfg.i))});
}

double quadruple_error_prob(const TetrahedronConfig& cfg, const NoiseModel& noise) {
    return 1.0 - mvn_halfspace_prob(quadruple_halfspaces(cfg), noise);
}

double trep_repeated_integral(int d1, int i, int j, const NoiseModel& noise) {
    const double ct = triangle_cosine({d1, i, j});
    const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
    if (st < 1e-6)
        throw std::invalid_argument("trep_repeated_integral: degenerate triangle");
    const double b1 = std::sqrt(static_cast<double>(d1)) / noise.sigma;
    const double b2 = std::sqrt(static_cast<double>(i)) / noise.sigma;
    auto integrand = [&](double t) {
        return normal_pdf(t) * normal_cdf((b2 - t * ct) / st);
    };
    return 1.0 - adaptive_quad(integrand, -kTailCut, std::min(b1, kTailCut), 1e-11);
}

double quep_repeated_integral(const TetrahedronConfig& cfg, const NoiseModel& noise) {
    const AngleSet an = tetra_angles(cfg);
    const double ct = std::cos(an.theta), st = std::sin(an.theta);
    const Eigen::Vector3d n3(std::sin(an.phi) * std::cos(an.alpha),
                             std::sin(an.phi) * std::sin(an.alpha), std::cos(an.phi));
    if (st < 1e-6 || n3.z() < 1e-6)
        throw std::invalid_argument("quep_repeated_integral: degenerate configuration");
    const double b1 = std::sqrt(static_cast<double>(cfg.d1)) / noise.sigma;
    const double b2 = std::sqrt(static_cast<double>(cfg.d2)) / noise.sigma;
    const double b3 = std::sqrt(static_cast<double>(cfg.i)) / noise.sigma;
    auto inner = [&](double t) {
        auto f = [&](double u) {
            return normal_pdf(u) * normal_cdf((b3 - t * n3.x() - u * n3.y()) / n3.z());
        };
        const double ulimit = (b2 - t * ct) / st;
        if (ulimit < -kTailCut) return 0.0;
        return normal_pdf(t) * adaptive_quad(f, -kTailCut, std::min(ulimit, kTailCut), 1e-11);
    };
    return 1.0 - adaptive_quad(inner, -kTailCut, std::min(b1, kTailCut), 1e-9);
}

}  // namespace geospec
