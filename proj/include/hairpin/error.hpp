#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hairpin {

enum class errc {
  empty_word,
  alphabet_mismatch,
  unknown_letter,
  ambiguous_word,
  alphabet_format,
  not_a_member,
  precondition_violated,
  bound_too_small,
  not_in_closure,
  not_non_crossing,
  not_anchored,
  wrong_class,
  condition_not_satisfied,
  condition_violated,
  verification_failed,
};

constexpr std::string_view to_string(errc code) noexcept {
  switch (code) {
    case errc::empty_word: return "EmptyWord";
    case errc::alphabet_mismatch: return "AlphabetMismatch";
    case errc::unknown_letter: return "UnknownLetter";
    case errc::ambiguous_word: return "AmbiguousWord";
    case errc::alphabet_format: return "AlphabetFormat";
    case errc::not_a_member: return "NotAMember";
    case errc::precondition_violated: return "PreconditionViolated";
    case errc::bound_too_small: return "BoundTooSmall";
    case errc::not_in_closure: return "NotInClosure";
    case errc::not_non_crossing: return "NotNonCrossing";
    case errc::not_anchored: return "NotAnchored";
    case errc::wrong_class: return "WrongClass";
    case errc::condition_not_satisfied: return "ConditionNotSatisfied";
    case errc::condition_violated: return "ConditionViolated";
    case errc::verification_failed: return "VerificationFailed";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace hairpin
