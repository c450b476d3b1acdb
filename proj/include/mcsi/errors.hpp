#pragma once

#include <stdexcept>
#include <string>

namespace mcsi {

enum class errc {
    empty_input,
    duplicate_same_color_position,
    non_positive_length,
    missing_color,
    bad_color,
    k_not_two,
    not_semi_disjoint,
    unknown_handle,
    k_out_of_range,
    non_positive_m,
    no_overlap,
    budget_exceeded,
    unsupported_k,
    unsupported_lengths,
    malformed_input,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_input: return "EmptyInput";
        case errc::duplicate_same_color_position: return "DuplicateSameColorPosition";
        case errc::non_positive_length: return "NonPositiveLength";
        case errc::missing_color: return "MissingColor";
        case errc::bad_color: return "BadColor";
        case errc::k_not_two: return "KNotTwo";
        case errc::not_semi_disjoint: return "NotSemiDisjoint";
        case errc::unknown_handle: return "UnknownHandle";
        case errc::k_out_of_range: return "KOutOfRange";
        case errc::non_positive_m: return "NonPositiveM";
        case errc::no_overlap: return "NoOverlap";
        case errc::budget_exceeded: return "BudgetExceeded";
        case errc::unsupported_k: return "UnsupportedK";
        case errc::unsupported_lengths: return "UnsupportedLengths";
        case errc::malformed_input: return "MalformedInput";
    }
    return "?";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace mcsi
