#pragma once

#include <cstddef>
#include <cstdint>

// Bit-row kernels behind the GF(2) elimination engine. Rows are packed into
// 64-bit words; every kernel has a scalar reference implementation plus SIMD
// variants selected once at load time. The dispatched pointers and the
// reference implementations must agree bit-for-bit (equivalence-tested).
namespace sf2::gf2 {

using Word = std::uint64_t;

using RowXorFn = void (*)(Word* dst, const Word* src, std::size_t nwords);
using RowIsZeroFn = bool (*)(const Word* row, std::size_t nwords);
using RowAndParityFn = bool (*)(const Word* a, const Word* b, std::size_t nwords);

// Reference kernels.
void row_xor_scalar(Word* dst, const Word* src, std::size_t nwords);
bool row_is_zero_scalar(const Word* row, std::size_t nwords);
bool row_and_parity_scalar(const Word* a, const Word* b, std::size_t nwords);

#if defined(__x86_64__) || defined(_M_X64)
void row_xor_avx2(Word* dst, const Word* src, std::size_t nwords);
bool row_is_zero_avx2(const Word* row, std::size_t nwords);
bool row_and_parity_avx2(const Word* a, const Word* b, std::size_t nwords);
bool cpu_supports_avx2();
#endif

#if defined(__aarch64__)
void row_xor_neon(Word* dst, const Word* src, std::size_t nwords);
bool row_is_zero_neon(const Word* row, std::size_t nwords);
bool row_and_parity_neon(const Word* a, const Word* b, std::size_t nwords);
#endif

// Best available variants, resolved once at startup.
extern const RowXorFn row_xor;
extern const RowIsZeroFn row_is_zero;
extern const RowAndParityFn row_and_parity;  // parity of popcount(a & b)

// "avx2", "neon" or "scalar".
const char* active_backend();

}  // namespace sf2::gf2
