/*
   Copyright 2026 The quasifs Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "quasifs/matrix.hpp"
#include "quasifs/tensor.hpp"

namespace quasifs {

/// Raw structure constants of a finite-dimensional quasi-Hopf algebra H with
/// basis e_0..e_{n-1}. Elements of H are coefficient vectors; elements of
/// H^{(x)k} are k-leg tensors with every leg of dimension n.
///
///   e_i e_j     = sum_k mult[i,j,k] e_k
///   Delta(e_i)  = sum_{j,k} comult[i,j,k] e_j (x) e_k
///   S(e_i)      = sum_j antipode(j,i) e_j      (column i holds S(e_i))
struct QuasiHopfData {
    QuasiHopfData(FieldPtr field, std::size_t dim);

    FieldPtr field;
    std::size_t dim;
    std::vector<std::string> basis_names;
    Vector unit;
    Tensor mult;
    Tensor comult;
    Vector counit;
    Tensor phi;
    std::optional<Tensor> phi_inv;
    Matrix antipode;
    Vector alpha;
    Vector beta;
};

/// Structure-constant algebra with the element-level operations every other
/// module builds on. Construction checks shapes only; the axioms are the
/// job of validate(). Immutable after construction.
class QuasiHopfAlgebra {
public:
    /// Throws DimensionError on inconsistent shapes and Singular when phi_inv
    /// is absent and phi has no inverse in H^{(x)3}.
    explicit QuasiHopfAlgebra(QuasiHopfData data);

    const QuasiHopfData& data() const { return data_; }
    std::size_t dim() const { return data_.dim; }
    const FieldPtr& field() const { return data_.field; }
    const Vector& unit() const { return data_.unit; }
    const Vector& alpha() const { return data_.alpha; }
    const Vector& beta() const { return data_.beta; }
    const Tensor& phi() const { return data_.phi; }
    const Tensor& phi_inv() const { return *data_.phi_inv; }
    const Matrix& antipode_matrix() const { return data_.antipode; }
    /// False when phi_inv was derived at construction time.
    bool phi_inv_supplied() const { return phi_inv_supplied_; }

    Vector basis(std::size_t i) const;
    Vector zero() const { return zero_vector(field(), dim()); }

    // Algebra structure
    Vector multiply(const Vector& a, const Vector& b) const;
    /// Componentwise product in H^{(x)k}.
    Tensor multiply(const Tensor& a, const Tensor& b) const;
    /// Left multiplication x -> a x as an n x n matrix.
    Matrix left_regular(const Vector& a) const;
    Matrix right_regular(const Vector& a) const;
    /// Two-sided inverse of a, or nullopt when a is not a unit.
    std::optional<Vector> inverse(const Vector& a) const;
    /// 1 (x) ... (x) 1 with `order` legs.
    Tensor one(std::size_t order) const;
    /// 1 (x) .. x .. (x) 1 with x in position `leg`.
    Tensor place(const Vector& x, std::size_t leg, std::size_t order) const;
    /// Multiplies the legs of t together left to right (nabla for two legs).
    Vector collapse(const Tensor& t) const;

    // Coalgebra structure
    Tensor coproduct(const Vector& a) const;
    /// Applies Delta to one leg; the result has one more leg.
    Tensor coproduct_leg(const Tensor& t, std::size_t leg) const;
    FieldElement counit(const Vector& a) const;
    /// Applies epsilon to one leg; the result has one leg fewer.
    Tensor counit_leg(const Tensor& t, std::size_t leg) const;

    // Antipode
    Vector antipode(const Vector& a) const;
    /// Throws Singular when S is not bijective.
    const Matrix& antipode_inverse_matrix() const;
    Vector antipode_inverse(const Vector& a) const;

    /// Sum of c * x1 (x) ... (x) xk; used to assemble elements of H^{(x)k}.
    Tensor tensor_product(const std::vector<Vector>& factors) const;

    const std::string& basis_name(std::size_t i) const { return data_.basis_names[i]; }

private:
    struct Term {
        std::size_t k;
        FieldElement c;
    };
    struct CoTerm {
        std::size_t j, k;
        FieldElement c;
    };

    QuasiHopfData data_;
    bool phi_inv_supplied_ = true;
    std::vector<std::vector<Term>> mult_terms_;     // index i*n+j
    std::vector<std::vector<CoTerm>> comult_terms_; // index i
    std::optional<Matrix> antipode_inv_;
};

} // namespace quasifs
