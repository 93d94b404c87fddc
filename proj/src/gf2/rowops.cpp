#include "sf2/gf2/rowops.hpp"

#include <bit>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif
#if defined(__aarch64__)
#include <arm_neon.h>
#endif

namespace sf2::gf2 {

void row_xor_scalar(Word* dst, const Word* src, std::size_t nwords) {
    for (std::size_t i = 0; i < nwords; ++i) dst[i] ^= src[i];
}

bool row_is_zero_scalar(const Word* row, std::size_t nwords) {
    Word acc = 0;
    for (std::size_t i = 0; i < nwords; ++i) acc |= row[i];
    return acc == 0;
}

bool row_and_parity_scalar(const Word* a, const Word* b, std::size_t nwords) {
    // popcount(x ^ y) == popcount(x) + popcount(y) (mod 2), so the parity of
    // the total AND-popcount survives xor-folding into one accumulator word.
    Word acc = 0;
    for (std::size_t i = 0; i < nwords; ++i) acc ^= a[i] & b[i];
    return std::popcount(acc) & 1u;
}

#if defined(__x86_64__) || defined(_M_X64)

bool cpu_supports_avx2() { return __builtin_cpu_supports("avx2"); }

__attribute__((target("avx2"))) void row_xor_avx2(Word* dst, const Word* src,
                                                  std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 8 <= nwords; i += 8) {
        __m256i d0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i d1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i + 4));
        __m256i s1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i + 4));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d0, s0));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i + 4), _mm256_xor_si256(d1, s1));
    }
    for (; i + 4 <= nwords; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < nwords; ++i) dst[i] ^= src[i];
}

__attribute__((target("avx2"))) bool row_is_zero_avx2(const Word* row, std::size_t nwords) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= nwords; i += 4)
        acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i)));
    Word tail = 0;
    for (; i < nwords; ++i) tail |= row[i];
    return _mm256_testz_si256(acc, acc) && tail == 0;
}

__attribute__((target("avx2"))) bool row_and_parity_avx2(const Word* a, const Word* b,
                                                         std::size_t nwords) {
    std::size_t i = 0;
    __m256i acc = _mm256_setzero_si256();
    for (; i + 4 <= nwords; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_xor_si256(acc, _mm256_and_si256(va, vb));
    }
    Word lanes[4];
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(lanes), acc);
    Word fold = lanes[0] ^ lanes[1] ^ lanes[2] ^ lanes[3];
    for (; i < nwords; ++i) fold ^= a[i] & b[i];
    return std::popcount(fold) & 1u;
}

#endif  // x86_64

#if defined(__aarch64__)

void row_xor_neon(Word* dst, const Word* src, std::size_t nwords) {
    std::size_t i = 0;
    for (; i + 2 <= nwords; i += 2) {
        uint64x2_t d = vld1q_u64(dst + i);
        uint64x2_t s = vld1q_u64(src + i);
        vst1q_u64(dst + i, veorq_u64(d, s));
    }
    for (; i < nwords; ++i) dst[i] ^= src[i];
}

bool row_is_zero_neon(const Word* row, std::size_t nwords) {
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + 2 <= nwords; i += 2) acc = vorrq_u64(acc, vld1q_u64(row + i));
    Word fold = vgetq_lane_u64(acc, 0) | vgetq_lane_u64(acc, 1);
    for (; i < nwords; ++i) fold |= row[i];
    return fold == 0;
}

bool row_and_parity_neon(const Word* a, const Word* b, std::size_t nwords) {
    std::size_t i = 0;
    uint64x2_t acc = vdupq_n_u64(0);
    for (; i + 2 <= nwords; i += 2)
        acc = veorq_u64(acc, vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    Word fold = vgetq_lane_u64(acc, 0) ^ vgetq_lane_u64(acc, 1);
    for (; i < nwords; ++i) fold ^= a[i] & b[i];
    return std::popcount(fold) & 1u;
}

#endif  // aarch64

namespace {

struct Dispatch {
    RowXorFn xor_fn = row_xor_scalar;
    RowIsZeroFn zero_fn = row_is_zero_scalar;
    RowAndParityFn parity_fn = row_and_parity_scalar;
    const char* name = "scalar";
};

Dispatch resolve() {
    Dispatch d;
#if defined(__x86_64__) || defined(_M_X64)
    if (cpu_supports_avx2()) {
        d.xor_fn = row_xor_avx2;
        d.zero_fn = row_is_zero_avx2;
        d.parity_fn = row_and_parity_avx2;
        d.name = "avx2";
    }
#elif defined(__aarch64__)
    d.xor_fn = row_xor_neon;
    d.zero_fn = row_is_zero_neon;
    d.parity_fn = row_and_parity_neon;
    d.name = "neon";
#endif
    return d;
}

const Dispatch g_dispatch = resolve();

}  // namespace

const RowXorFn row_xor = g_dispatch.xor_fn;
const RowIsZeroFn row_is_zero = g_dispatch.zero_fn;
const RowAndParityFn row_and_parity = g_dispatch.parity_fn;

const char* active_backend() { return g_dispatch.name; }

}  // namespace sf2::gf2
