#include "rrw/partitions.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace rrw {

bool StringBlock::contains(int v) const {
  return std::find(parts.begin(), parts.end(), v) != parts.end();
}

Partition RankProfile::hook_partition() const { return Partition(hooks); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1)
      throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be given largest first");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> parts;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t begin = token.find_first_not_of(" \t");
    if (begin == std::string::npos)
      throw std::invalid_argument("empty part in partition");
    std::size_t end = token.find_last_not_of(" \t");
    token = token.substr(begin, end - begin + 1);
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse part '" + token + "'");
    }
    if (used != token.size())
      throw std::invalid_argument("cannot parse part '" + token + "'");
    parts.push_back(v);
  }
  return Partition(parts);
}

long long Partition::sum() const {
  long long s = 0;
  for (int p : parts_) s += p;
  return s;
}

int Partition::distinct_values() const {
  int d = 0;
  for (std::size_t i = 0; i < parts_.size(); ++i)
    if (i == 0 || parts_[i] != parts_[i - 1]) ++d;
  return d;
}

int Partition::multiples_of_3() const {
  int d = 0;
  for (int p : parts_)
    if (p % 3 == 0) ++d;
  return d;
}

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_[0]);
  for (int col = 0; col < parts_[0]; ++col) {
    int cnt = 0;
    for (int p : parts_) {
      if (p > col)
        ++cnt;
      else
        break;
    }
    conj[col] = cnt;
  }
  return Partition(std::move(conj));
}

RankProfile Partition::rank_profile() const {
  RankProfile rp;
  if (parts_.empty()) return rp;
  const std::vector<int> conj = conjugate().parts();
  int d = 0;
  while (d < size() && parts_[d] >= d + 1) ++d;
  rp.durfee = d;
  for (int i = 1; i <= d; ++i) {
    rp.hooks.push_back(parts_[i - 1] + conj[i - 1] - 2 * i + 1);
    rp.ranks.push_back(parts_[i - 1] - conj[i - 1]);
  }
  return rp;
}

bool Partition::has_distinct_parts() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] == parts_[i - 1]) return false;
  return true;
}

bool Partition::all_parts_odd() const {
  for (int p : parts_)
    if (p % 2 == 0) return false;
  return true;
}

bool Partition::all_parts_even() const {
  for (int p : parts_)
    if (p % 2 != 0) return false;
  return true;
}

bool Partition::gaps_at_least_2() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i - 1] - parts_[i] < 2) return false;
  return true;
}

bool Partition::gaps_at_least_2_no_ones() const {
  return gaps_at_least_2() && (parts_.empty() || parts_.back() >= 2);
}

std::vector<Chain> Partition::chains() const {
  if (!gaps_at_least_2())
    throw std::invalid_argument("chains require a partition with gaps >= 2");
  std::vector<Chain> out;
  for (int i = size() - 1; i >= 0;) {
    int j = i;
    while (j > 0 && parts_[j - 1] - parts_[j] == 2) --j;
    out.push_back(Chain{parts_[i], i - j + 1});
    i = j - 1;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<StringBlock> Partition::strings() const {
  if (!gaps_at_least_2())
    throw std::invalid_argument("strings require a partition with gaps >= 2");
  std::vector<StringBlock> out;
  for (int i = size() - 1; i >= 0;) {
    int j = i;
    StringBlock blk;
    while (j > 0 && parts_[j - 1] - parts_[j] <= 3) {
      if (parts_[j - 1] - parts_[j] == 3) ++blk.eta;
      --j;
    }
    for (int t = i; t >= j; --t) blk.parts.push_back(parts_[t]);
    out.push_back(std::move(blk));
    i = j - 1;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.str();
}

PartitionFilter PartitionFilter::all() { return PartitionFilter(FilterKind::All); }
PartitionFilter PartitionFilter::distinct() {
  return PartitionFilter(FilterKind::Distinct);
}
PartitionFilter PartitionFilter::odd_parts() {
  return PartitionFilter(FilterKind::OddParts);
}
PartitionFilter PartitionFilter::rr() { return PartitionFilter(FilterKind::RR); }
PartitionFilter PartitionFilter::rr2() { return PartitionFilter(FilterKind::RR2); }

PartitionFilter PartitionFilter::parts_allowed(int modulus,
                                               std::set<int> residues) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  PartitionFilter f(FilterKind::PartsAllowed);
  f.modulus_ = modulus;
  for (int r : residues) f.residues_.insert(((r % modulus) + modulus) % modulus);
  return f;
}

PartitionFilter PartitionFilter::ranks_in(int lo, int hi) {
  PartitionFilter f(FilterKind::RanksIn);
  f.lo_ = lo;
  f.hi_ = hi;
  return f;
}

bool PartitionFilter::residue_ok(int v) const {
  return residues_.count(v % modulus_) != 0;
}

namespace {

struct Enumerator {
  const PartitionFilter& f;
  const std::function<void(const Partition&)>& emit;
  std::vector<int> parts;

  bool allowed(int v) const {
    switch (f.kind()) {
      case FilterKind::OddParts:
        return v % 2 == 1;
      case FilterKind::PartsAllowed:
        return f.residue_ok(v);
      case FilterKind::RR2:
        return v >= 2;
      default:
        return true;
    }
  }

  int next_max(int v) const {
    switch (f.kind()) {
      case FilterKind::Distinct:
        return v - 1;
      case FilterKind::RR:
      case FilterKind::RR2:
        return v - 2;
      default:
        return v;
    }
  }

  void finish() {
    Partition p(parts);
    if (f.kind() == FilterKind::RanksIn) {
      for (int r : p.rank_profile().ranks)
        if (r < f.rank_lo() || r > f.rank_hi()) return;
    }
    emit(p);
  }

  void rec(int remaining, int maxpart) {
    if (remaining == 0) {
      finish();
      return;
    }
    for (int v = std::min(remaining, maxpart); v >= 1; --v) {
      if (!allowed(v)) continue;
      parts.push_back(v);
      rec(remaining - v, next_max(v));
      parts.pop_back();
    }
  }
};

}  // namespace

void enumerate_partitions(int n, const PartitionFilter& filter,
                          const std::function<void(const Partition&)>& emit) {
  if (n < 0) throw std::invalid_argument("partition total must be >= 0");
  Enumerator e{filter, emit, {}};
  e.rec(n, n);
}

std::vector<Partition> list_partitions(int n, const PartitionFilter& filter) {
  std::vector<Partition> out;
  enumerate_partitions(n, filter, [&](const Partition& p) { out.push_back(p); });
  return out;
}

long long count_partitions(int n, const PartitionFilter& filter) {
  long long cnt = 0;
  enumerate_partitions(n, filter, [&](const Partition&) { ++cnt; });
  return cnt;
}

}  // namespace rrw
