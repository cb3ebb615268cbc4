#include <algorithm>
#include <string>
#include <vector>

#include "pentaglue/gluing.hpp"

namespace pentaglue {

namespace {

// Old slot index of new side `i` for a pentagon read from side `start` in
// direction `orient`.
int old_side(int start, int orient, int i) {
  return orient > 0 ? (start + i) % kSides
                    : ((start - i - 1) % kSides + kSides) % kSides;
}

// Inverse of old_side.
int new_side(int start, int orient, int old) {
  return orient > 0 ? ((old - start) % kSides + kSides) % kSides
                    : ((start - old - 1) % kSides + kSides) % kSides;
}

struct Frame {
  int start = 0;
  int orient = 0;
};

// Breadth-first relabeling of the component containing `root`, read from
// (side, orient). Each entry is 10 * (5 * pentagon + side) + flag.
std::vector<int> relabel(const Gluing& g, int root, int side, int orient,
                         std::vector<int>* component) {
  const int n = g.pentagons();
  std::vector<int> label(n, -1);
  std::vector<Frame> frame(n);
  std::vector<int> order{root};
  label[root] = 0;
  frame[root] = {side, orient};
  std::vector<int> code;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const int p = order[k];
    for (int i = 0; i < kSides; ++i) {
      const EdgeSlot here{p, old_side(frame[p].start, frame[p].orient, i)};
      const EdgeSlot there = *g.partner(here);
      const bool flip = g.orientation(here) == Orientation::flip;
      const int q = there.pentagon;
      if (label[q] < 0) {
        // Enter q through its side 0 with matching orientation.
        const int oq = flip ? frame[p].orient : -frame[p].orient;
        const int start = oq > 0 ? there.side : (there.side + 1) % kSides;
        label[q] = static_cast<int>(order.size());
        frame[q] = {start, oq};
        order.push_back(q);
      }
      const bool same = frame[p].orient == frame[q].orient;
      const bool new_flip = flip == same;
      const int s = new_side(frame[q].start, frame[q].orient, there.side);
      code.push_back(10 * (kSides * label[q] + s) + (new_flip ? 0 : 1));
    }
  }
  if (component) *component = order;
  return code;
}

const char* kDigits =
    "0123456789abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";

std::string encode(const std::vector<int>& code) {
  std::string out = "n" + std::to_string(code.size() / kSides) + "-";
  for (const int entry : code) {
    const int slot = entry / 10;
    out += kDigits[slot / 62];
    out += kDigits[slot % 62];
    out += entry % 10 == 0 ? 'f' : 'k';
  }
  return out;
}

}  // namespace

std::string canonical_code(const Gluing& g) {
  if (!g.is_perfect()) throw GluingError("matching is not perfect");
  const int n = g.pentagons();
  std::vector<bool> done(n, false);
  std::vector<std::string> parts;
  for (int root = 0; root < n; ++root) {
    if (done[root]) continue;
    std::vector<int> component;
    relabel(g, root, 0, 1, &component);
    std::vector<int> best;
    for (const int p : component) {
      done[p] = true;
      for (int s = 0; s < kSides; ++s) {
        for (const int o : {1, -1}) {
          auto code = relabel(g, p, s, o, nullptr);
          if (best.empty() || code < best) best = std::move(code);
        }
      }
    }
    parts.push_back(encode(best));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& part : parts) {
    if (!out.empty()) out += '+';
    out += part;
  }
  return out;
}

}  // namespace pentaglue
