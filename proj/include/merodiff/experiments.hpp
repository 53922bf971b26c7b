#ifndef MERODIFF_EXPERIMENTS_HPP
#define MERODIFF_EXPERIMENTS_HPP

#include <complex>
#include <string>
#include <vector>

#include "merodiff/scalar.hpp"

// Reproduction harness behind the CLI subcommands. The rational-exactness and
// elliptic sweeps instantiate the kernels with long double internally: the
// double-precision noise floor of the heavier matrix pipelines sits right at
// the error levels being measured.
namespace merodiff::experiments {

struct SweepPoint {
    int n;
    double error;
};

// Relative max-norm error of the third derivative of (z^7+z+1)/z^10 obtained
// from the rational matrix pipeline on nodes (1+i)(1+k/N)/2, per node count.
std::vector<SweepPoint> table1_sweep(int n_min, int n_max);

enum class EllipticFunction { Jacobi, Weierstrass };

struct EllipticConfig {
    EllipticFunction function = EllipticFunction::Jacobi;
    std::vector<int> n_values;  // odd node counts
    Complex omega1{2, 0};       // Weierstrass lattice (ignored for Jacobi)
    Complex omega2{0, 2};
};

// Max-norm error of the pole-corrected trigonometric derivative against the
// closed-form derivative oracle, per node count.
std::vector<SweepPoint> elliptic_sweep(const EllipticConfig& config);

enum class KummerBasis { Algebraic, Trigonometric };
enum class EigenvectorGauge { MaxEntry, LeastSquares };

struct KummerConfig {
    Complex b{2.5, 0};
    int n = 21;
    Complex scale{5, 5};  // nodes are scale * k / n
    KummerBasis basis = KummerBasis::Algebraic;
    EigenvectorGauge gauge = EigenvectorGauge::MaxEntry;
    double tol = 1e-12;
    int max_iter = 500;
};

struct KummerResult {
    Complex lambda;
    double error = 0;  // max-norm distance between the gauged vectors
    std::vector<Complex> nodes;
    std::vector<Complex> eigenvector;  // gauged
    std::vector<Complex> oracle;       // M(lambda, b, z_k), gauged the same way
    int iterations = 0;
    double residual = 0;
};

KummerResult kummer_experiment(const KummerConfig& config);

std::string sweep_to_csv(const std::vector<SweepPoint>& rows);
std::string kummer_to_csv(const KummerResult& result);
std::string diff_to_csv(const std::vector<Complex>& nodes, const std::vector<Complex>& df);

}  // namespace merodiff::experiments

#endif
