#pragma once

#include <optional>

#include "homcat/doihopf.hpp"

namespace homcat {

// q: C⊗C -> A⊗A, column (c,d) holds Q(c⊗d) ; r is the convolution inverse once solved
struct BraidingKernel {
    LinearMap q;
    std::optional<LinearMap> r;
    bool two_sided = false;

    // shape (dim_C, dim_C, dim_A, dim_A)
    Tensor q_tensor(std::size_t dim_C, std::size_t dim_A) const;
    static BraidingKernel from_tensor(const Tensor& t);
};

struct NoInverse : StructuralError {
    std::vector<std::size_t> witness;  // (c, d) pair whose equations alone have no solution; empty if none
    NoInverse(const std::string& what, std::vector<std::size_t> w) : StructuralError(what), witness(std::move(w)) {}
};

// Q∘(α_C⊗α_C) = (α_A⊗α_A)∘Q, id "kernel-twist"
AxiomEntry check_kernel_twist(const DoiHopfDatum& d, const LinearMap& q);
// x,y: C⊗C -> A⊗A ; (c,d) ↦ x(c2,d2)y(c1,d1) in A⊗A
LinearMap convolution(const DoiHopfDatum& d, const LinearMap& x, const LinearMap& y);
// ε(c)ε(d)1⊗1
LinearMap convolution_unit(const DoiHopfDatum& d);
BraidingKernel convolution_inverse(const DoiHopfDatum& d, const LinearMap& q);

// one entry per condition: "cond-3.4" (A-linearity of t), "cond-3.5" (C-colinearity of t),
// "cond-3.6" (first hexagon), "cond-3.7" (second hexagon)
AxiomReport check_braiding_kernel(const DoiHopfDatum& d, const BraidingKernel& K);
// the same four properties read off the braiding on U = A⊗C, restricted to 1⊗C and projected by id⊗ε;
// ids "a-linearity", "c-colinearity", "hexagon-1.1", "hexagon-1.2"
AxiomReport categorical_conditions(const DoiHopfDatum& d, const BraidingKernel& K);

// t(m⊗n) = Q(α⁻²n1, α⁻²m1)·(α⁻²n0⊗α⁻²m0) as a pipeline on M⊗N
Pipeline braiding_pipeline(const DoiHopfDatum& d, const BraidingKernel& K, const DoiHopfModule& M,
                           const DoiHopfModule& N);
LinearMap braiding_map(const DoiHopfDatum& d, const BraidingKernel& K, const DoiHopfModule& M,
                       const DoiHopfModule& N);

struct Braiding {
    ModuleMorphism t;                // M⊗N -> N⊗M
    std::optional<LinearMap> inverse;
};
// validated; the inverse is computed by exact inversion when asked for
Braiding braiding(const DoiHopfDatum& d, const BraidingKernel& K, const DoiHopfModule& M, const DoiHopfModule& N,
                  bool with_inverse = false);

// "hexagon-1.1", "hexagon-1.2" and, per supplied morphism f_i, "naturality-first-i" / "naturality-second-i"
// (t_{Y,N}(f⊗id) = (id⊗f)t_{X,N} and t_{M,Y}(id⊗f) = (f⊗id)t_{M,X} for f: X -> Y)
AxiomReport verify_hexagons(const DoiHopfDatum& d, const BraidingKernel& K, const DoiHopfModule& U,
                            const DoiHopfModule& V, const DoiHopfModule& W,
                            const std::vector<ModuleMorphism>& natural = {});

// Q(h⊗g) = ε(g)(1⊗h) over yetter_drinfeld_datum(H), inverse solved
BraidingKernel yd_kernel(const HomHopfAlgebra& H);

// R = R¹⊗R² as a vector in A⊗A
struct QTElement {
    std::vector<Scalar> r;
    LinearMap column() const { return LinearMap::column_vector(r); }
};

// "qt-intertwining": Δ^op(h)R = RΔ(h) ; "qt-comult-first": (Δ⊗α)R = R13R23 ;
// "qt-comult-second": (α⊗Δ)R = R13R12 ; "hom-ybe-a": (R12R13)R23 = R23(R13R12) ;
// "hom-ybe-b": R12(R13R23) = (R23R13)R12
AxiomReport quasitriangular_check(const HomBialgebra& A, const QTElement& R);
// sigma: C⊗C -> k ; "coqt-quasi-commutative", "coqt-mult-first", "coqt-mult-second"
AxiomReport coquasitriangular_check(const HomBialgebra& C, const LinearMap& sigma);

// product in A^{⊗k}, factorwise
SparseVec multiply_elements(const HomAlgebra& A, std::size_t factors, const SparseVec& x, const SparseVec& y);

// (k, A, k): ρ(a) = α(a)⊗1 ; kernels are elements of A⊗A
DoiHopfDatum qt_datum(const HomHopfAlgebra& A);
// (k, k, C): 1·c = α(c) ; kernels are forms C⊗C -> k
DoiHopfDatum coqt_datum(const HomHopfAlgebra& C);
// the kernel k⊗k -> A⊗A given by an element, and its associated element Q⁻¹
BraidingKernel element_kernel(const DoiHopfDatum& d, const QTElement& q);
QTElement associated_element(const BraidingKernel& K);

}  // namespace homcat
