#include "merodiff/experiments.hpp"

#include <algorithm>

#include "merodiff/diffmat.hpp"
#include "merodiff/eigensolver.hpp"
#include "merodiff/serialize.hpp"
#include "merodiff/specfun.hpp"

namespace merodiff::experiments {

namespace {

using LD = long double;
using CLD = std::complex<long double>;

}  // namespace

std::vector<SweepPoint> table1_sweep(int n_min, int n_max) {
    if (n_min < 4 || n_min > n_max)
        throw ValidationError("table1: need 4 <= n_min <= n_max");
    const PoleSet<CLD> poles(std::vector<Pole<CLD>>{{CLD{0, 0}, 10}});
    std::vector<SweepPoint> rows;
    for (int n = n_min; n <= n_max; ++n) {
        const NodeSet<CLD> nodes = segment_nodes(CLD{1, 1}, LD(0.5), LD(1), n);
        const DiffMatrix<CLD> d3 = rational_power(nodes, poles, 3);
        std::vector<CLD> f(nodes.size());
        for (std::size_t k = 0; k < nodes.size(); ++k) f[k] = rational_test(nodes[k], 0);
        const std::vector<CLD> approx = d3.apply(f);
        LD err = 0;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            const CLD exact = rational_test(nodes[k], 3);
            err = std::max(err, std::abs((exact - approx[k]) / exact));
        }
        rows.push_back({n, static_cast<double>(err)});
    }
    return rows;
}

std::vector<SweepPoint> elliptic_sweep(const EllipticConfig& config) {
    if (config.n_values.empty()) throw ValidationError("elliptic: no node counts given");
    for (int n : config.n_values)
        if (n % 2 == 0)
            throw EvenNodeCountError("elliptic: the trigonometric construction needs odd N");

    std::vector<SweepPoint> rows;
    if (config.function == EllipticFunction::Jacobi) {
        const LD m = LD(0.5);
        const auto params = EllipticParams<LD>::jacobi(m);
        const CLD a1{0, params.Kprime};
        const CLD a2{2 * params.K, params.Kprime};
        const PoleSet<CLD> poles(std::vector<Pole<CLD>>{{a1, 1}, {a2, 1}});
        for (int n : config.n_values) {
            const NodeSet<CLD> nodes = segment_nodes(CLD{2, 1}, LD(0.5), LD(1), n);
            const DiffMatrix<CLD> d = periodic_meromorphic_matrix(nodes, poles);
            std::vector<CLD> f(nodes.size()), fp(nodes.size());
            for (std::size_t k = 0; k < nodes.size(); ++k) {
                const auto v = jacobi_sn_cn_dn(nodes[k], m);
                f[k] = v.sn;
                fp[k] = v.cn * v.dn;
            }
            const std::vector<CLD> approx = d.apply(f);
            LD err = 0;
            for (std::size_t k = 0; k < nodes.size(); ++k)
                err = std::max(err, std::abs(fp[k] - approx[k]));
            rows.push_back({n, static_cast<double>(err)});
        }
    } else {
        const auto params = EllipticParams<LD>::weierstrass(
            CLD{config.omega1.real(), config.omega1.imag()},
            CLD{config.omega2.real(), config.omega2.imag()});
        const PoleSet<CLD> poles(std::vector<Pole<CLD>>{{CLD{0, 0}, 2}});
        for (int n : config.n_values) {
            const NodeSet<CLD> nodes = segment_nodes(CLD{1, 1}, LD(0.5), LD(1), n);
            const DiffMatrix<CLD> d = periodic_meromorphic_matrix(nodes, poles);
            std::vector<CLD> f(nodes.size()), fp(nodes.size());
            for (std::size_t k = 0; k < nodes.size(); ++k) {
                f[k] = weierstrass_p(nodes[k], params, 0);
                fp[k] = weierstrass_p(nodes[k], params, 1);
            }
            const std::vector<CLD> approx = d.apply(f);
            LD err = 0;
            for (std::size_t k = 0; k < nodes.size(); ++k)
                err = std::max(err, std::abs(fp[k] - approx[k]));
            rows.push_back({n, static_cast<double>(err)});
        }
    }
    return rows;
}

namespace {

// Align `target` onto `reference` by the least-squares complex factor
// c = <target, reference>/<target, target> minimizing ||reference - c target||_2.
void gauge_least_squares(std::vector<Complex>& reference, std::vector<Complex>& target) {
    const double scale_r = max_norm(reference);
    for (Complex& x : reference) x /= scale_r;
    const double scale_t = max_norm(target);
    for (Complex& x : target) x /= scale_t;
    Complex num{0}, den{0};
    for (std::size_t i = 0; i < target.size(); ++i) {
        num += std::conj(target[i]) * reference[i];
        den += std::conj(target[i]) * target[i];
    }
    const Complex c = num / den;
    for (Complex& x : target) x *= c;
}

}  // namespace

KummerResult kummer_experiment(const KummerConfig& config) {
    const double br = std::round(config.b.real());
    if (config.b.imag() == 0 && br <= 0 && config.b.real() == br)
        throw ValidationError("kummer: b must not be a non-positive integer");

    const NodeSet<Complex> nodes = segment_nodes(config.scale, 0.0, 1.0, config.n);
    const DiffMatrix<Complex> d = config.basis == KummerBasis::Algebraic
                                      ? algebraic_matrix(nodes)
                                      : trigonometric_matrix(nodes);
    const CMatrix l = build_kummer_operator(nodes, config.b, d);
    const EigenPair<Complex> pair = smallest_eigenpair(l, config.tol, config.max_iter);

    KummerResult out;
    out.lambda = pair.lambda;
    out.nodes = nodes.points();
    out.eigenvector = pair.vector;
    out.iterations = pair.iterations;
    out.residual = pair.residual;

    out.oracle.resize(nodes.size());
    for (std::size_t k = 0; k < nodes.size(); ++k)
        out.oracle[k] = kummer_M(pair.lambda, config.b, nodes[k]);

    if (config.gauge == EigenvectorGauge::MaxEntry) {
        detail::gauge_max_entry(out.eigenvector);
        detail::gauge_max_entry(out.oracle);
    } else {
        gauge_least_squares(out.eigenvector, out.oracle);
    }
    double err = 0;
    for (std::size_t k = 0; k < nodes.size(); ++k)
        err = std::max(err, std::abs(out.eigenvector[k] - out.oracle[k]));
    out.error = err;
    return out;
}

std::string sweep_to_csv(const std::vector<SweepPoint>& rows) {
    std::string csv = "N,error\n";
    for (const auto& r : rows) csv += std::to_string(r.n) + "," + format_g17(r.error) + "\n";
    return csv;
}

std::string kummer_to_csv(const KummerResult& result) {
    std::string csv = "k,Re z,Im z,Re f,Im f,Re M,Im M\n";
    for (std::size_t k = 0; k < result.nodes.size(); ++k) {
        csv += std::to_string(k + 1) + ",";
        csv += csv_row({result.nodes[k].real(), result.nodes[k].imag(),
                                result.eigenvector[k].real(), result.eigenvector[k].imag(),
                                result.oracle[k].real(), result.oracle[k].imag()});
        csv += "\n";
    }
    return csv;
}

std::string diff_to_csv(const std::vector<Complex>& nodes, const std::vector<Complex>& df) {
    std::string csv = "k,Re z,Im z,Re df,Im df\n";
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        csv += std::to_string(k + 1) + ",";
        csv += csv_row({nodes[k].real(), nodes[k].imag(), df[k].real(), df[k].imag()});
        csv += "\n";
    }
    return csv;
}

}  // namespace merodiff::experiments
