#include "kpm/linalg.hpp"

namespace kpm {

RankKernelImage rank_kernel_image(const ScalarMatrix& m) {
    auto ech = reduced_echelon(m);
    RankKernelImage out;
    out.rank = ech.rank;
    out.kernel = kernel_basis_of(ech, m.cols());
    out.image = ScalarMatrix(m.rows(), ech.rank);
    for (int r = 0; r < ech.rank; ++r)
        for (int i = 0; i < m.rows(); ++i) out.image(i, r) = m(i, ech.pivots[r]);
    if (!(m * out.kernel).is_zero()) throw MalformedInput("kernel verification failed");
    if (out.rank + out.kernel.cols() != m.cols())
        throw MalformedInput("rank-nullity verification failed");
    return out;
}

Poly charpoly(const ScalarMatrix& m) {
    if (m.rows() != m.cols()) throw MalformedInput("charpoly of non-square matrix");
    const int n = m.rows();
    // Faddeev-LeVerrier: exact over the rationals.
    std::vector<Scalar> c(n + 1, Scalar(0));
    c[n] = Scalar(1);
    ScalarMatrix b = ScalarMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        b = m * b;
        Scalar tr(0);
        for (int i = 0; i < n; ++i) tr += b(i, i);
        c[n - k] = -(tr / Scalar(long(k)));
        for (int i = 0; i < n; ++i) b(i, i) += c[n - k];
    }
    return Poly::from_coeffs(std::move(c));
}

std::vector<Eigenvalue> charpoly_eigenvalues(const ScalarMatrix& m) {
    Poly cp = charpoly(m);
    std::vector<Eigenvalue> out;
    int counter = 0;
    for (const auto& [factor, mult] : factor_rational(cp).factors) {
        Eigenvalue ev;
        ev.minpoly = factor;
        ev.multiplicity = mult;
        ev.conjugates = factor.degree();
        if (factor.degree() == 1) {
            ev.value = -factor.at(0);
        } else {
            std::vector<Scalar> tail(factor.coeffs().begin(), factor.coeffs().end() - 1);
            auto field = Field::make(nullptr, std::move(tail), "r" + std::to_string(++counter));
            ev.value = Scalar::generator(field);
        }
        out.push_back(std::move(ev));
    }
    // Sanity: multiplicities add up to the matrix size.
    int total = 0;
    for (const auto& ev : out) total += ev.multiplicity * ev.conjugates;
    if (total != m.rows()) throw MalformedInput("eigenvalue multiplicity mismatch");
    return out;
}

}  // namespace kpm
