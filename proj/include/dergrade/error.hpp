#pragma once

#include <stdexcept>
#include <string>

namespace dergrade {

/// Base of every error thrown by the library.
class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands belong to different groups (e.g. Z^2 vs Z^3, S_4 vs S_5 elements).
class group_mismatch : public error {
public:
  using error::error;
};

/// Two arrows were composed with S(lhs) != T(rhs).
class composition_error : public error {
public:
  composition_error(std::string lhs_source, std::string rhs_target)
      : error("arrows are not composable: source of left arrow " + lhs_source +
              " differs from target of right arrow " + rhs_target),
        lhs_source_(std::move(lhs_source)),
        rhs_target_(std::move(rhs_target)) {}

  const std::string& lhs_source() const noexcept { return lhs_source_; }
  const std::string& rhs_target() const noexcept { return rhs_target_; }

private:
  std::string lhs_source_;
  std::string rhs_target_;
};

/// An element required to be central is not.
class centrality_error : public error {
public:
  using error::error;
};

/// Malformed derivation / job specification (wrong arity, unknown generator,
/// relator violated by a generator table, ...).
class spec_error : public error {
public:
  using error::error;
};

/// JSON that could not be parsed or did not have the expected shape.
class parse_error : public error {
public:
  using error::error;
};

/// The group kernel lacks an oracle the operation needs.
class capability_error : public error {
public:
  using error::error;
};

/// A quotient or grading setup was refused.
class setup_rejected : public error {
public:
  enum class reason { not_normal, non_abelian_quotient, trivial_grading };

  setup_rejected(reason why, const std::string& what) : error(what), why_(why) {}

  reason why() const noexcept { return why_; }

private:
  reason why_;
};

} // namespace dergrade
