#pragma once

#include <optional>
#include <string>

#include "homcat/braid.hpp"

namespace homcat {

// B with a right H-action act: B⊗H -> B
struct RightModuleAlgebra {
    HomAlgebra algebra;
    LinearMap action;
};

// "right-module-unit", "right-module-twist", "right-module-hom-associativity",
// "module-algebra-mult" ((bb')←α_H²(h) = (b←h1)(b'←h2)), "module-algebra-unit"
AxiomReport check_right_module_algebra(const HomBialgebra& H, const RightModuleAlgebra& B);

// C* with ⟨f*g, c⟩ = ⟨f, α⁻²(c1)⟩⟨g, α⁻²(c2)⟩, ⟨f1,c⟩⟨f2,d⟩ = ⟨f, α⁻²(cd)⟩, twist (α_C⁻¹)*,
// and ⟨f←h, c⟩ = ⟨f, h·α_C⁻²(c)⟩. The coalgebra half needs the algebra on C.
struct DualModuleAlgebra {
    RightModuleAlgebra module_algebra;
    std::optional<HomCoalgebra> coalgebra;
    std::optional<LinearMap> antipode;  // (S_C)*

    const HomAlgebra& algebra() const { return module_algebra.algebra; }
};
DualModuleAlgebra dual_module_algebra(const DoiHopfDatum& d);

// carrier is A⊗B, basis a#b at a*dim_B + b
struct SmashAlgebra {
    HomAlgebra carrier;
    std::size_t dim_A = 0, dim_B = 0;
    std::string provenance;
};
// (a#b)(a'#b') = aα_A⁻¹(a'0) # (α_B⁻¹(b) ← α_H⁻²(a'1))b'
SmashAlgebra smash_product(const HomBialgebra& H, const HomAlgebra& A, const LinearMap& A_coaction,
                           const RightModuleAlgebra& B);

// module over A#C*, action (A⊗C*)⊗M -> M
struct SmashModule {
    std::size_t dim = 0;
    LinearMap action;
    Twist twist;
};
AxiomReport check_smash_module(const SmashAlgebra& S, const SmashModule& N);
// (a#f)·m = ⟨f, m1⟩ a·α_M⁻¹(m0)
SmashModule transport_to_smash(const DoiHopfDatum& d, const DoiHopfModule& M);
// a·m = (a#ε)·m, ρ(m) = Σ (1#eⁱ)·m ⊗ e_i
DoiHopfModule transport_from_smash(const DoiHopfDatum& d, const SmashModule& N);

struct SmashBialgebra {
    SmashAlgebra algebra;
    DualModuleAlgebra dual;
    HomBialgebra bialgebra;  // tensor coproduct
    std::optional<LinearMap> antipode;
    // "smash-coproduct-compatibility", "smash-coproduct-compatibility-expanded" (Warning when only the
    // Sweedler-split form fails), "smash-counit-compatibility", then the bialgebra (and Hopf) suite
    AxiomReport report;

    HomHopfAlgebra hopf() const;
};
SmashBialgebra smash_bialgebra(const DoiHopfDatum& d);
// x·(m⊗n) = x1·m ⊗ x2·n
SmashModule smash_tensor_modules(const SmashBialgebra& S, const SmashModule& M, const SmashModule& N);
// the regular module of A#C*
SmashModule regular_module(const SmashAlgebra& S);

struct DerivationFailure : StructuralError {
    LinearMap residual;
    DerivationFailure(const std::string& what, LinearMap r) : StructuralError(what), residual(std::move(r)) {}
};

// m⊗n ↦ R²·α_N⁻¹(n) ⊗ R¹·α_M⁻¹(m)
LinearMap r_braiding(const SmashModule& M, const SmashModule& N, const QTElement& R);
// the unique R whose braiding equals the kernel braiding on the regular module; throws DerivationFailure
QTElement induced_R(const DoiHopfDatum& d, const BraidingKernel& K, const SmashBialgebra& S);

struct DrinfeldDouble {
    HomHopfAlgebra hopf;
    QTElement R;
    SmashBialgebra smash;
    // full Hom-Hopf suite followed by the quasitriangular suite of R (prefix "R/")
    AxiomReport report;
    // displayed multiplication and antipode compared with the smash construction
    AxiomReport cross_check;
};
DrinfeldDouble drinfeld_double(const HomHopfAlgebra& H);

}  // namespace homcat
