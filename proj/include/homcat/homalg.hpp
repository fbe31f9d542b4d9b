#pragma once

#include "homcat/exactlin.hpp"
#include "homcat/report.hpp"

namespace homcat {

struct InvertibilityError : StructuralError {
    using StructuralError::StructuralError;
};

// mult: A⊗A -> A, unit: k -> A
struct HomAlgebra {
    std::size_t dim = 0;
    LinearMap mult;
    LinearMap unit;
    Twist twist;

    Tensor mult_tensor() const { return Tensor::from_map(mult, {dim, dim}, {dim}); }
    std::vector<Scalar> unit_vector() const { return dense_from_sparse(unit.column(0), dim); }
};

// comult: C -> C⊗C, counit: C -> k
struct HomCoalgebra {
    std::size_t dim = 0;
    LinearMap comult;
    LinearMap counit;
    Twist twist;

    Tensor comult_tensor() const { return Tensor::from_map(comult, {dim}, {dim, dim}); }
    std::vector<Scalar> counit_vector() const { return counit.row_values(0); }
};

struct HomBialgebra {
    HomAlgebra algebra;
    HomCoalgebra coalgebra;

    std::size_t dim() const { return algebra.dim; }
    const Twist& twist() const { return algebra.twist; }
};

struct HomHopfAlgebra {
    HomBialgebra bialgebra;
    LinearMap antipode;

    std::size_t dim() const { return bialgebra.dim(); }
    const Twist& twist() const { return bialgebra.twist(); }
    const HomAlgebra& algebra() const { return bialgebra.algebra; }
    const HomCoalgebra& coalgebra() const { return bialgebra.coalgebra; }
};

// shape checks; throw StructuralError
void validate(const HomAlgebra& a);
void validate(const HomCoalgebra& c);
void validate(const HomBialgebra& b);
void validate(const HomHopfAlgebra& h);

HomAlgebra make_algebra(LinearMap mult, LinearMap unit, LinearMap twist);
HomCoalgebra make_coalgebra(LinearMap comult, LinearMap counit, LinearMap twist);

AxiomReport check_structure(const HomAlgebra& a);
AxiomReport check_structure(const HomCoalgebra& c);
AxiomReport check_structure(const HomBialgebra& b);
AxiomReport check_structure(const HomHopfAlgebra& h);

// f : A -> B
AxiomReport check_algebra_map(const HomAlgebra& a, const HomAlgebra& b, const LinearMap& f);
AxiomReport check_coalgebra_map(const HomCoalgebra& c, const HomCoalgebra& d, const LinearMap& f);

HomHopfAlgebra twist_by_endomorphism(const HomHopfAlgebra& classical, const LinearMap& alpha);
HomBialgebra opposite(const HomBialgebra& b);
// H^op with antipode S⁻¹
HomHopfAlgebra opposite_hopf(const HomHopfAlgebra& h);
HomBialgebra tensor_bialgebra(const HomBialgebra& b1, const HomBialgebra& b2);
HomHopfAlgebra tensor_hopf(const HomHopfAlgebra& h1, const HomHopfAlgebra& h2);

// plain transpose; twist is the transpose of α
HomAlgebra dual(const HomCoalgebra& c);
HomCoalgebra dual(const HomAlgebra& a);
HomBialgebra dual(const HomBialgebra& b);
HomHopfAlgebra dual(const HomHopfAlgebra& h);

HomHopfAlgebra ground_field();

}  // namespace homcat
