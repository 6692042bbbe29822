#include "mtcheck/trace.hpp"

#include <algorithm>
#include <set>

#include "hash.hpp"
#include "mtcheck/error.hpp"

namespace mtc {

namespace {

void require_distinct(const std::vector<std::string>& names, const char* what) {
  if (names.empty()) {
    throw Error(Errc::InvalidSignature, std::string("no ") + what + " declared");
  }
  std::set<std::string> seen;
  for (const auto& name : names) {
    if (!seen.insert(name).second) {
      throw Error(Errc::InvalidSignature,
                  std::string("duplicate ") + what + " '" + name + "'");
    }
  }
}

std::size_t hash_components(const std::vector<GlobalTrace>& components) {
  std::size_t seed = components.size();
  for (const auto& component : components) {
    seed = detail::hash_mix(seed, component.size());
    for (const auto& action : component) {
      seed = detail::hash_mix(seed, hash_value(action));
    }
  }
  return seed;
}

}  // namespace

Signature::Signature(std::vector<std::string> lifelines,
                     std::vector<std::string> messages)
    : lifelines_(std::move(lifelines)), messages_(std::move(messages)) {
  require_distinct(lifelines_, "lifelines");
  require_distinct(messages_, "messages");
}

std::optional<std::size_t> Signature::lifeline_index(
    const std::string& name) const {
  auto it = std::find(lifelines_.begin(), lifelines_.end(), name);
  if (it == lifelines_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - lifelines_.begin());
}

bool Signature::has_lifeline(const std::string& name) const {
  return lifeline_index(name).has_value();
}

bool Signature::has_message(const std::string& name) const {
  return std::find(messages_.begin(), messages_.end(), name) != messages_.end();
}

std::string Action::to_string() const {
  return lifeline + (direction == Direction::Emit ? "!" : "?") + message;
}

std::size_t hash_value(const Action& action) {
  std::size_t seed = std::hash<std::string>{}(action.lifeline);
  seed = detail::hash_mix(seed, static_cast<std::size_t>(action.direction));
  return detail::hash_mix(seed, std::hash<std::string>{}(action.message));
}

void check_action(const Action& action, const Signature& sig) {
  if (!sig.has_lifeline(action.lifeline)) {
    throw Error(Errc::UnknownLifeline,
                "unknown lifeline '" + action.lifeline + "'");
  }
  if (!sig.has_message(action.message)) {
    throw Error(Errc::UnknownMessage,
                "unknown message '" + action.message + "'");
  }
}

std::string to_string(const GlobalTrace& trace) {
  if (trace.empty()) return "eps";
  std::string out;
  for (std::size_t k = 0; k < trace.size(); ++k) {
    if (k) out += '.';
    out += trace[k].to_string();
  }
  return out;
}

MultiTrace::MultiTrace(std::vector<GlobalTrace> components)
    : components_(std::move(components)) {
  for (const auto& component : components_) length_ += component.size();
  hash_ = hash_components(components_);
}

MultiTrace MultiTrace::empty(const Signature& sig) {
  return MultiTrace(std::vector<GlobalTrace>(sig.lifelines().size()));
}

MultiTrace MultiTrace::over(const Signature& sig,
                            std::vector<GlobalTrace> components) {
  if (components.size() != sig.lifelines().size()) {
    throw Error(Errc::MissingComponent,
                "expected " + std::to_string(sig.lifelines().size()) +
                    " components, got " + std::to_string(components.size()));
  }
  for (std::size_t j = 0; j < components.size(); ++j) {
    for (const auto& action : components[j]) {
      check_action(action, sig);
      if (action.lifeline != sig.lifelines()[j]) {
        throw Error(Errc::WrongLifeline,
                    "action " + action.to_string() + " in component of '" +
                        sig.lifelines()[j] + "'");
      }
    }
  }
  return MultiTrace(std::move(components));
}

std::string MultiTrace::to_string(const Signature& sig) const {
  std::string out = "{";
  for (std::size_t j = 0; j < components_.size(); ++j) {
    if (j) out += "; ";
    out += sig.lifelines().at(j) + ": " + mtc::to_string(components_[j]);
  }
  return out + "}";
}

MultiTrace project(const GlobalTrace& trace, const Signature& sig) {
  std::vector<GlobalTrace> components(sig.lifelines().size());
  for (const auto& action : trace) {
    check_action(action, sig);
    components[*sig.lifeline_index(action.lifeline)].push_back(action);
  }
  return MultiTrace(std::move(components));
}

std::vector<HeadAction> head_actions(const MultiTrace& mu) {
  std::vector<HeadAction> heads;
  for (std::size_t j = 0; j < mu.arity(); ++j) {
    if (!mu.component(j).empty()) heads.push_back({j, mu.component(j).front()});
  }
  return heads;
}

MultiTrace consume(const MultiTrace& mu, std::size_t j, const Action& act) {
  if (j >= mu.arity() || mu.component(j).empty() ||
      mu.component(j).front() != act) {
    throw Error(Errc::HeadMismatch, "component " + std::to_string(j) +
                                        " does not start with " +
                                        act.to_string());
  }
  auto components = mu.components();
  components[j].erase(components[j].begin());
  return MultiTrace(std::move(components));
}

}  // namespace mtc
