#pragma once

#include <string>
#include <vector>

#include "pit/circuits.hpp"
#include "pit/kronecker.hpp"
#include "pit/partitions.hpp"

namespace pit {

// Line-oriented text formats; '#' starts a comment, blank lines are ignored,
// variables are 1-based on disk and 0-based in memory. Serialization is
// canonical, so parse(serialize(x)) == x and equal objects serialize equally.

std::string serialize_depth3(const Depth3Circuit& c);
Depth3Circuit parse_depth3(const std::string& text);

// Recorded Roabp bounds are recomputed (tightly) on parse; they are metadata
// and not part of round-trip equality.
std::string serialize_roabp(const Roabp& r);
Roabp parse_roabp(const std::string& text);

enum class CircuitKind { kDepth3, kRoabp };
CircuitKind sniff_circuit(const std::string& text);

struct HittingSetFile {
  std::uint64_t p = kDefaultPrime;
  int n = 0;
  std::vector<std::vector<std::uint64_t>> points;

  friend bool operator==(const HittingSetFile&, const HittingSetFile&) = default;
};
std::string serialize_hitting_set(const HittingSetFile& h);
HittingSetFile parse_hitting_set(const std::string& text);

// {1,2}{3,4} with 1-based variables; colors ordered by least element.
std::string serialize_partition(const Partition& part);
Partition parse_partition(const std::string& line, int n);

// kmap q=<list> base=<list> targets=<t(1),...,t(n)>; single-target maps have
// one-element q/base lists and all targets 1. Exponents are reconstructed
// from each variable's rank within its target group.
std::string serialize_kmap(const MonomialMap& m);
MonomialMap parse_kmap(const std::string& text);

struct Verdict {
  bool zero = true;
  std::vector<std::uint64_t> witness;  // nonzero verdicts carry the point

  friend bool operator==(const Verdict&, const Verdict&) = default;
};
std::string serialize_verdict(const Verdict& v);
Verdict parse_verdict(const std::string& text);

}  // namespace pit
