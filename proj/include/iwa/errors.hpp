#pragma once

#include <stdexcept>
#include <string>

namespace iwa {

enum class errc {
    bad_argument,
    all_zero_at_precision,
    truncation_too_small,
    not_distinguished,
    precision_exhausted,
    precision_budget_exceeded,
    not_finite,
    not_type_s,
    not_semisimple,
    embedding_denominator,
    level_too_small,
    zero_at_precision,
    io_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::bad_argument: return "BadArgument";
        case errc::all_zero_at_precision: return "AllZeroAtPrecision";
        case errc::truncation_too_small: return "TruncationTooSmall";
        case errc::not_distinguished: return "NotDistinguished";
        case errc::precision_exhausted: return "PrecisionExhausted";
        case errc::precision_budget_exceeded: return "PrecisionBudgetExceeded";
        case errc::not_finite: return "NotFinite";
        case errc::not_type_s: return "NotTypeS";
        case errc::not_semisimple: return "NotSemisimple";
        case errc::embedding_denominator: return "EmbeddingDenominator";
        case errc::level_too_small: return "LevelTooSmall";
        case errc::zero_at_precision: return "ZeroAtPrecision";
        case errc::io_error: return "IoError";
    }
    return "Unknown";
}

class calc_error : public std::runtime_error {
  public:
    calc_error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw calc_error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
    if (!cond) fail(code, what);
}

} // namespace iwa
