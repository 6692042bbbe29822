#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mtc {

/// Ordered, duplicate-free lifeline and message vocabularies. Lifeline order
/// is the component order of every multi-trace built over the signature.
class Signature {
 public:
  /// Throws Error(InvalidSignature) on empty or duplicated names.
  Signature(std::vector<std::string> lifelines,
            std::vector<std::string> messages);

  const std::vector<std::string>& lifelines() const { return lifelines_; }
  const std::vector<std::string>& messages() const { return messages_; }

  std::optional<std::size_t> lifeline_index(const std::string& name) const;
  bool has_lifeline(const std::string& name) const;
  bool has_message(const std::string& name) const;

  bool operator==(const Signature&) const = default;

 private:
  std::vector<std::string> lifelines_;
  std::vector<std::string> messages_;
};

enum class Direction : unsigned char { Emit, Receive };

/// `l!m` (emission) or `l?m` (reception).
struct Action {
  std::string lifeline;
  Direction direction = Direction::Emit;
  std::string message;

  static Action emit(std::string lifeline, std::string message) {
    return {std::move(lifeline), Direction::Emit, std::move(message)};
  }
  static Action receive(std::string lifeline, std::string message) {
    return {std::move(lifeline), Direction::Receive, std::move(message)};
  }

  std::string to_string() const;

  friend bool operator==(const Action&, const Action&) = default;
  friend auto operator<=>(const Action&, const Action&) = default;
};

std::size_t hash_value(const Action& action);

/// Throws UnknownLifeline / UnknownMessage if `action` is foreign to `sig`.
void check_action(const Action& action, const Signature& sig);

/// A totally ordered global execution; the empty vector is epsilon.
using GlobalTrace = std::vector<Action>;

std::string to_string(const GlobalTrace& trace);

/// One local trace per lifeline, in signature order.
class MultiTrace {
 public:
  MultiTrace() = default;
  explicit MultiTrace(std::vector<GlobalTrace> components);

  /// The multi-trace (eps, ..., eps) over `sig`.
  static MultiTrace empty(const Signature& sig);

  /// Validates that component j only holds actions on lifeline j and that
  /// every name belongs to `sig`.
  static MultiTrace over(const Signature& sig,
                         std::vector<GlobalTrace> components);

  std::size_t arity() const { return components_.size(); }
  const GlobalTrace& component(std::size_t j) const { return components_.at(j); }
  const std::vector<GlobalTrace>& components() const { return components_; }

  /// Sum of component lengths.
  std::size_t length() const { return length_; }
  bool is_empty() const { return length_ == 0; }
  std::size_t hash() const { return hash_; }

  std::string to_string(const Signature& sig) const;

  friend bool operator==(const MultiTrace& a, const MultiTrace& b) {
    return a.hash_ == b.hash_ && a.components_ == b.components_;
  }
  friend auto operator<=>(const MultiTrace& a, const MultiTrace& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<GlobalTrace> components_;
  std::size_t length_ = 0;
  std::size_t hash_ = 0;
};

/// Distributes each action of `trace` onto its lifeline's component,
/// preserving per-lifeline order.
MultiTrace project(const GlobalTrace& trace, const Signature& sig);

inline std::size_t multitrace_length(const MultiTrace& mu) { return mu.length(); }

struct HeadAction {
  std::size_t component;
  Action action;

  friend bool operator==(const HeadAction&, const HeadAction&) = default;
};

/// First action of every non-empty component, by increasing component index.
std::vector<HeadAction> head_actions(const MultiTrace& mu);

/// Removes the head of component `j`; throws HeadMismatch unless that head
/// equals `act`.
MultiTrace consume(const MultiTrace& mu, std::size_t j, const Action& act);

}  // namespace mtc

template <>
struct std::hash<mtc::MultiTrace> {
  std::size_t operator()(const mtc::MultiTrace& mu) const noexcept {
    return mu.hash();
  }
};
