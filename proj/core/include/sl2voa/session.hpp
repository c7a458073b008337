#pragma once

// All engines for one level k, created on demand per top label i.
// Caches live here and are never shared between sessions.

#include <map>
#include <memory>

#include "sl2voa/fock.hpp"
#include "sl2voa/modes.hpp"
#include "sl2voa/quotient.hpp"
#include "sl2voa/twist.hpp"

namespace sl2voa {

class Session {
public:
  explicit Session(int k, int degree_cap = kDefaultDegreeCap);
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  int level() const { return k_; }
  int degree_cap() const { return cap_; }

  FockSpace& vacuum() { return space(0); }
  FockSpace& space(int i);
  ModeEngine& modes(int i);
  Quotient& quotient(int i);
  TwistEngine& twist(int i);
  const NamedState& state(StateName name);

private:
  struct Slot {
    std::unique_ptr<FockSpace> space;
    std::unique_ptr<ModeEngine> modes;
    std::unique_ptr<Quotient> quotient;
    std::unique_ptr<TwistEngine> twist;
  };
  Slot& slot(int i);

  int k_;
  int cap_;
  std::map<int, Slot> slots_;
  std::map<StateName, NamedState> states_;
};

}  // namespace sl2voa
