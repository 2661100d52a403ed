#pragma once

#include <cstdint>

namespace lindec {

// Thread-local counter of field operations (add/sub/neg/mul/inv at prime-field
// granularity). Scalar PrimeField calls bump it one at a time; bulk kernels
// (axpy, matrix-vector products, structure-constant products) add their counts
// in one shot so the hot loops stay tight.
namespace detail {
inline thread_local std::uint64_t field_op_counter = 0;
}

inline void count_field_ops(std::uint64_t n) { detail::field_op_counter += n; }
inline std::uint64_t field_ops() { return detail::field_op_counter; }
inline void reset_field_ops() { detail::field_op_counter = 0; }

// Measures the ops spent between construction and elapsed()/destruction.
class OpMeter {
  public:
    OpMeter() : start_(field_ops()) {}
    std::uint64_t elapsed() const { return field_ops() - start_; }

  private:
    std::uint64_t start_;
};

} // namespace lindec
