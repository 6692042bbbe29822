#include "denotation.hpp"

#include <algorithm>
#include <functional>

namespace mtc::testing {

namespace {

using Merge = std::function<void(const GlobalTrace&, const GlobalTrace&,
                                 std::size_t, Traces&)>;

void concat(const GlobalTrace& u, const GlobalTrace& v, std::size_t,
            Traces& out) {
  GlobalTrace w = u;
  w.insert(w.end(), v.begin(), v.end());
  out.insert(std::move(w));
}

void shuffle_into(const GlobalTrace& u, std::size_t i, const GlobalTrace& v,
                  std::size_t j, GlobalTrace& prefix, Traces& out,
                  bool weak) {
  if (i == u.size() && j == v.size()) {
    out.insert(prefix);
    return;
  }
  if (i < u.size()) {
    prefix.push_back(u[i]);
    shuffle_into(u, i + 1, v, j, prefix, out, weak);
    prefix.pop_back();
  }
  if (j < v.size()) {
    // Weak sequencing: an action of the right operand may overtake the rest
    // of the left one only if none of those remaining actions share its
    // lifeline.
    bool blocked = weak && std::any_of(u.begin() + i, u.end(), [&](const Action& a) {
                     return a.lifeline == v[j].lifeline;
                   });
    if (!blocked) {
      prefix.push_back(v[j]);
      shuffle_into(u, i, v, j + 1, prefix, out, weak);
      prefix.pop_back();
    }
  }
}

void interleave(const GlobalTrace& u, const GlobalTrace& v, std::size_t,
                Traces& out) {
  GlobalTrace prefix;
  shuffle_into(u, 0, v, 0, prefix, out, false);
}

void weak_merge(const GlobalTrace& u, const GlobalTrace& v, std::size_t,
                Traces& out) {
  GlobalTrace prefix;
  shuffle_into(u, 0, v, 0, prefix, out, true);
}

Merge merge_for(Op op) {
  switch (op) {
    case Op::Strict: return concat;
    case Op::Seq: return weak_merge;
    default: return interleave;
  }
}

Traces combine(const Traces& left, const Traces& right, Op op,
               std::size_t max_length) {
  Traces out;
  Merge merge = merge_for(op);
  for (const auto& u : left) {
    for (const auto& v : right) {
      if (u.size() + v.size() > max_length) continue;
      merge(u, v, max_length, out);
    }
  }
  return out;
}

Traces denote_loop(const Term& term, std::uint32_t unrollings,
                   std::uint32_t default_unrollings, std::size_t max_length) {
  Traces body = denote(term.body(), default_unrollings, max_length);
  Merge merge = merge_for(loop_scheduler(term.op()));
  Traces acc{GlobalTrace{}};
  for (std::uint32_t k = 0; k < unrollings; ++k) {
    // An iteration starts with its own first action; later iterations may
    // then interleave with its remainder. Under seq this is narrower than
    // the plain weak-sequencing closure: a later iteration cannot overtake
    // an iteration that has not started yet.
    Traces next{GlobalTrace{}};
    for (const auto& u : body) {
      if (u.empty()) continue;
      GlobalTrace rest(u.begin() + 1, u.end());
      for (const auto& v : acc) {
        if (u.size() + v.size() > max_length) continue;
        Traces tails;
        merge(rest, v, max_length, tails);
        for (const auto& tail : tails) {
          GlobalTrace w{u.front()};
          w.insert(w.end(), tail.begin(), tail.end());
          next.insert(std::move(w));
        }
      }
    }
    if (next == acc) break;
    acc = std::move(next);
  }
  return acc;
}

}  // namespace

Traces denote(const Term& term, std::uint32_t default_unrollings,
              std::size_t max_length) {
  switch (term.op()) {
    case Op::Empty:
      return {GlobalTrace{}};
    case Op::Action:
      if (max_length == 0) return {};
      return {GlobalTrace{term.action()}};
    case Op::Alt: {
      Traces out = denote(term.left(), default_unrollings, max_length);
      Traces right = denote(term.right(), default_unrollings, max_length);
      out.insert(right.begin(), right.end());
      return out;
    }
    case Op::Strict:
    case Op::Seq:
    case Op::Par:
      return combine(denote(term.left(), default_unrollings, max_length),
                     denote(term.right(), default_unrollings, max_length),
                     term.op(), max_length);
    default:
      return denote_loop(term, term.loop_budget().value_or(default_unrollings),
                         default_unrollings, max_length);
  }
}

Traces without_lifeline(const Traces& traces, const std::string& lifeline) {
  Traces out;
  for (const auto& t : traces) {
    if (std::none_of(t.begin(), t.end(),
                     [&](const Action& a) { return a.lifeline == lifeline; })) {
      out.insert(t);
    }
  }
  return out;
}

Traces truncate(const Traces& traces, std::size_t max_length) {
  Traces out;
  for (const auto& t : traces) {
    if (t.size() <= max_length) out.insert(t);
  }
  return out;
}

}  // namespace mtc::testing
