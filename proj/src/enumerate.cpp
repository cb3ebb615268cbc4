#include <array>
#include <map>
#include <vector>

#include "pentaglue/gluing.hpp"

namespace pentaglue {

namespace {

// Depth-first matching of the lowest free side. Pentagons are introduced in
// the order they are first reached, always through their side 0, so each
// gluing is produced once per (start pentagon, start side) at most.
class Search {
 public:
  explicit Search(int n)
      : n_(n),
        partner_(kSides * n, -1),
        parent_(kSides * n),
        size_(kSides * n, 1),
        open_(kSides * n, 2) {
    for (int i = 0; i < kSides * n; ++i) parent_[i] = i;
  }

  void run() { descend(1, 0, 0, 0); }

  std::map<std::string, Gluing>& found() { return found_; }

 private:
  int find(int c) const {
    while (parent_[c] != c) c = parent_[c];
    return c;
  }

  static int corner(int pentagon, int k) {
    return kSides * pentagon + (k % kSides);
  }

  // Returns false if a cone point collects more than three corners.
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return true;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    open_[a] += open_[b];
    return size_[a] <= 3;
  }

  void descend(int used, int from, int closed_curvature, int closed_corners) {
    int slot = from;
    while (slot < kSides * n_ && partner_[slot] >= 0) ++slot;
    if (slot == kSides * n_) {
      if (used == n_ && closed_curvature == 20) record();
      return;
    }
    const int p = slot / kSides;
    if (p >= used) return;  // the introduced pentagons form a closed piece

    // Candidate partners: free sides of introduced pentagons, or side 0 of
    // the next new pentagon.
    const int limit = kSides * std::min(used, n_);
    for (int other = slot + 1; other <= limit && other < kSides * n_; ++other) {
      if (other == limit) {
        if (used == n_) break;
      } else if (partner_[other] >= 0) {
        continue;
      }
      const int next_used = other == limit ? used + 1 : used;
      try_pair(slot, other, next_used, closed_curvature, closed_corners);
    }
  }

  void try_pair(int a, int b, int used, int closed_curvature,
                int closed_corners) {
    const auto saved_parent = parent_;
    const auto saved_size = size_;
    const auto saved_open = open_;
    partner_[a] = b;
    partner_[b] = a;

    const int pa = a / kSides, sa = a % kSides;
    const int pb = b / kSides, sb = b % kSides;
    // Flip identification: corner sa ~ corner sb + 1, corner sa + 1 ~ sb.
    const std::array<int, 4> ends{corner(pa, sa), corner(pa, sa + 1),
                                  corner(pb, sb), corner(pb, sb + 1)};
    for (const int c : ends) --open_[find(c)];
    bool ok = merge(ends[0], ends[3]) && merge(ends[1], ends[2]);

    if (ok) {
      std::array<int, 4> roots{};
      int count = 0;
      for (const int c : ends) {
        const int r = find(c);
        bool dup = false;
        for (int i = 0; i < count; ++i) dup = dup || roots[i] == r;
        if (!dup) roots[count++] = r;
      }
      for (int i = 0; i < count; ++i) {
        const int r = roots[i];
        if (open_[r] == 0) {
          closed_curvature += 10 - 3 * size_[r];
          closed_corners += size_[r];
        }
      }
      // The remaining corners form at least ceil(rest / 3) cone points,
      // so their curvature is at least 10 * ceil(rest / 3) - 3 * rest.
      const int rest = kSides * n_ - closed_corners;
      const int least = 10 * ((rest + 2) / 3) - 3 * rest;
      ok = closed_curvature + least <= 20;
    }
    if (ok) descend(used, a + 1, closed_curvature, closed_corners);

    partner_[a] = -1;
    partner_[b] = -1;
    parent_ = saved_parent;
    size_ = saved_size;
    open_ = saved_open;
  }

  void record() {
    Gluing g(n_);
    for (int i = 0; i < kSides * n_; ++i) {
      const int j = partner_[i];
      if (j > i) {
        g.glue({i / kSides, i % kSides}, {j / kSides, j % kSides},
               Orientation::flip);
      }
    }
    if (!check_alexandrov(g)) return;
    auto code = canonical_code(g);
    found_.try_emplace(std::move(code), std::move(g));
  }

  int n_;
  std::vector<int> partner_;
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> open_;
  std::map<std::string, Gluing> found_;
};

}  // namespace

std::vector<Gluing> enumerate_gluings(int n, EnumerateOptions options) {
  if (n < 1) return {};
  if (n > 12 && !options.no_bound) return {};
  Search search(n);
  search.run();
  std::vector<Gluing> out;
  for (auto& [code, g] : search.found()) out.push_back(std::move(g));
  return out;
}

}  // namespace pentaglue
