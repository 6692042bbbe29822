#pragma once

#include <string>

#include "mtcheck/term.hpp"
#include "mtcheck/trace.hpp"

namespace mtc::testing {

inline Term emit(const std::string& l, const std::string& m) {
  return Term::action(Action::emit(l, m));
}
inline Term recv(const std::string& l, const std::string& m) {
  return Term::action(Action::receive(l, m));
}
inline Action out(const std::string& l, const std::string& m) {
  return Action::emit(l, m);
}
inline Action in(const std::string& l, const std::string& m) {
  return Action::receive(l, m);
}

/// seq(alt(strict(b!m2,c?m2),0),b!m3) over lifelines b, c.
inline Term small_example() {
  return Term::seq(Term::alt(Term::strict(emit("b", "m2"), recv("c", "m2")),
                             Term::empty()),
                   emit("b", "m3"));
}
inline Signature small_signature() { return Signature({"b", "c"}, {"m2", "m3"}); }

/// The loop body of the running example.
inline Term running_loop_body() {
  return Term::seq(Term::strict(emit("a", "m1"), recv("b", "m1")), small_example());
}

/// seq(loop_seq(seq(strict(a!m1,b?m1), seq(alt(strict(b!m2,c?m2),0), b!m3))),
///     par(a!m1, strict(c!m4, a?m4)))
inline Term running_example() {
  return Term::seq(Term::loop_seq(running_loop_body()),
                   Term::par(emit("a", "m1"),
                             Term::strict(emit("c", "m4"), recv("a", "m4"))));
}
inline Signature running_signature() {
  return Signature({"a", "b", "c"}, {"m1", "m2", "m3", "m4"});
}

/// (a!m1.a?m4, eps, c!m4)
inline MultiTrace running_multitrace() {
  return MultiTrace({{out("a", "m1"), in("a", "m4")}, {}, {out("c", "m4")}});
}

inline Term handshake() { return Term::strict(emit("a", "m"), recv("b", "m")); }
inline Signature handshake_signature() { return Signature({"a", "b"}, {"m"}); }

}  // namespace mtc::testing
