#ifndef COALGLAB_TENSOR_HPP
#define COALGLAB_TENSOR_HPP

#include "coalglab/matrix.hpp"

namespace coalglab {

// Dense order-3 structure-constant tensor.
struct Tensor3 {
    Field field;
    std::size_t d0 = 0, d1 = 0, d2 = 0;
    std::vector<Scalar> v;

    Tensor3() : field(Field::rationals()) {}
    Tensor3(const Field& f, std::size_t a, std::size_t b, std::size_t c)
        : field(f), d0(a), d1(b), d2(c), v(a * b * c, Scalar::zero(f)) {}

    Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return v[(i * d1 + j) * d2 + k]; }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return v[(i * d1 + j) * d2 + k];
    }

    bool operator==(const Tensor3& o) const {
        return field == o.field && d0 == o.d0 && d1 == o.d1 && d2 == o.d2 && v == o.v;
    }
    bool operator!=(const Tensor3& o) const { return !(*this == o); }
};

} // namespace coalglab

#endif
