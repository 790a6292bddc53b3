#pragma once

#include <vector>

#include "rtmapf/domain.hpp"

namespace rtmapf {

// Turns a partial solution into a conflict-free commitment for one window.
// AllStay: everyone waits. IStay: agents involved in a conflict (or without a
// plan) wait; everyone else follows their path.
enum class FailPolicy { AllStay, IStay };

// Exactly window+1 cells per agent, conflict-free over [0, window].
struct SolutionPrefix {
  PartialSolution steps;
  std::vector<bool> stayed;  // agents forced to wait by the fail policy
  int conflicts_before = 0;  // conflicts within the window before resolution

  int stayed_count() const;
};

SolutionPrefix resolve(const PartialSolution& partial, FailPolicy policy, int window);

}  // namespace rtmapf
