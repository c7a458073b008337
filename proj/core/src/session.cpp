#include "sl2voa/session.hpp"

#include "sl2voa/errors.hpp"

namespace sl2voa {

Session::Session(int k, int degree_cap) : k_(k), cap_(degree_cap) { ModuleId{k, 0}.validate(); }

Session::Slot& Session::slot(int i) {
  auto it = slots_.find(i);
  if (it != slots_.end()) return it->second;
  ModuleId{k_, i}.validate();
  Slot s;
  s.space = std::make_unique<FockSpace>(ModuleId{k_, i}, cap_);
  return slots_.emplace(i, std::move(s)).first->second;
}

FockSpace& Session::space(int i) { return *slot(i).space; }

ModeEngine& Session::modes(int i) {
  Slot& s = slot(i);
  if (!s.modes) s.modes = std::make_unique<ModeEngine>(vacuum(), *s.space);
  return *s.modes;
}

Quotient& Session::quotient(int i) {
  Slot& s = slot(i);
  if (!s.quotient) s.quotient = std::make_unique<Quotient>(*s.space);
  return *s.quotient;
}

TwistEngine& Session::twist(int i) {
  Slot& s = slot(i);
  if (!s.twist) s.twist = std::make_unique<TwistEngine>(modes(i), quotient(i));
  return *s.twist;
}

const NamedState& Session::state(StateName name) {
  auto it = states_.find(name);
  if (it != states_.end()) return it->second;
  return states_.emplace(name, build(name, vacuum())).first->second;
}

}  // namespace sl2voa
