#include <adnil/dyck.hpp>
#include <adnil/nilpotence.hpp>

#include <algorithm>
#include <stdexcept>

namespace adnil {

DyckPath::DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {
  long long y = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    y += steps_[i] == Step::Up ? 1 : -1;
    if (y < 0) throw std::invalid_argument("path goes below the axis at step " + std::to_string(i + 1));
  }
  if (y != 0) throw std::invalid_argument("path does not return to the axis");
}

DyckPath DyckPath::parse(std::string_view text) {
  std::vector<Step> steps;
  steps.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case 'U': case 'u': case '3': steps.push_back(Step::Up); break;
      case 'D': case 'd': case '4': steps.push_back(Step::Down); break;
      default: throw std::invalid_argument(std::string("unexpected character '") + c + "' in path literal");
    }
  }
  return DyckPath(std::move(steps));
}

std::string DyckPath::to_string() const {
  std::string s;
  s.reserve(steps_.size());
  for (Step st : steps_) s.push_back(st == Step::Up ? 'U' : 'D');
  return s;
}

int height(const DyckPath& p) {
  int y = 0, best = 0;
  for (Step s : p.steps()) {
    y += s == Step::Up ? 1 : -1;
    best = std::max(best, y);
  }
  return best;
}

long long twice_area(const DyckPath& p) {
  long long y = 0, sum = 0;
  for (Step s : p.steps()) {
    const long long next = y + (s == Step::Up ? 1 : -1);
    sum += y + next;
    y = next;
  }
  return sum / 2;
}

PathStats stats(const DyckPath& p) { return {height(p), twice_area(p)}; }

DyckPath rotation_path(const StaircasePartition& p) {
  const int n = p.rank();
  std::vector<Step> steps;
  steps.reserve(static_cast<std::size_t>(2 * n + 2));
  // Build the border word already reversed: walk rows bottom to top.
  for (int i = n + 1; i >= 1; --i) {
    steps.push_back(Step::Up);
    const int prev = i == 1 ? n + 1 : p.part(i - 1);
    steps.insert(steps.end(), static_cast<std::size_t>(prev - p.part(i)), Step::Down);
  }
  return DyckPath(std::move(steps));
}

namespace {

struct Rectangle {
  int first_row = 0;
  int rows = 0;
  int col_offset = 0;  // i_{j-1}
  int width = 0;       // i_j - i_{j-1}
};

// Rectangles in processing order: j = k first.
std::vector<Rectangle> rectangles(const TouchSequence& ts) {
  const int n = ts.rank;
  const int k = ts.length();
  auto idx = [&](int j) { return j == 0 ? 0 : ts.indices[static_cast<std::size_t>(j - 1)]; };
  std::vector<Rectangle> out;
  for (int j = k; j >= 1; --j) {
    const int first = j == k ? 2 : n - idx(j + 1) + 3;
    const int last = n - idx(j) + 1;
    out.push_back({first, std::max(0, last - first + 1), idx(j - 1), idx(j) - idx(j - 1)});
  }
  return out;
}

// Insertion counts a_0..a_r read off the border of the sub-diagram.
std::vector<int> rectangle_word(const StaircasePartition& p, const Rectangle& rect) {
  std::vector<int> mu;
  for (int s = 0; s < rect.rows; ++s)
    mu.push_back(std::clamp(p.part(rect.first_row + s) - rect.col_offset, 0, rect.width));
  std::vector<int> a;
  a.push_back(rect.width - (mu.empty() ? 0 : mu.front()));
  for (std::size_t s = 0; s < mu.size(); ++s) a.push_back(mu[s] - (s + 1 < mu.size() ? mu[s + 1] : 0));
  return a;
}

std::string word_text(const std::vector<int>& a) {
  std::string w;
  for (std::size_t s = 0; s < a.size(); ++s) {
    if (s > 0) w.push_back('d');
    w.append(static_cast<std::size_t>(a[s]), 'l');
  }
  return w;
}

std::vector<Step> zigzag(int pieces) {
  std::vector<Step> steps;
  for (int i = 0; i < pieces; ++i) {
    steps.push_back(Step::Up);
    steps.push_back(Step::Down);
  }
  return steps;
}

// Puts (UD)^{a[s]} inside the apex of the (s+1)-th highest peak.
std::vector<Step> insert_at_highest_peaks(const std::vector<Step>& path, const std::vector<int>& a) {
  int top = 0, y = 0;
  for (Step s : path) top = std::max(top, y += s == Step::Up ? 1 : -1);

  std::vector<Step> out;
  std::size_t peak = 0;
  y = 0;
  for (std::size_t i = 0; i < path.size(); ++i) {
    out.push_back(path[i]);
    y += path[i] == Step::Up ? 1 : -1;
    if (y == top && path[i] == Step::Up) {
      if (peak >= a.size()) throw std::logic_error("more highest peaks than insertion slots");
      for (int rep = 0; rep < a[peak]; ++rep) {
        out.push_back(Step::Up);
        out.push_back(Step::Down);
      }
      ++peak;
    }
  }
  if (peak != a.size())
    throw std::logic_error("expected " + std::to_string(a.size()) + " highest peaks, found " + std::to_string(peak));
  return out;
}

}  // namespace

std::vector<BijectionStage> height_bijection_stages(const StaircasePartition& p) {
  const int n = p.rank();
  const TouchSequence ts = touch_sequence(p);
  const int ik = ts.length() == 0 ? 0 : ts.indices.back();

  std::vector<BijectionStage> stages;
  std::vector<Step> steps = zigzag(n + 1 - ik);
  stages.push_back({"", DyckPath(steps)});
  for (const Rectangle& rect : rectangles(ts)) {
    const std::vector<int> a = rectangle_word(p, rect);
    steps = insert_at_highest_peaks(steps, a);
    stages.push_back({word_text(a), DyckPath(steps)});
  }
  return stages;
}

DyckPath height_bijection(const StaircasePartition& p) { return height_bijection_stages(p).back().path; }

StaircasePartition height_bijection_inverse(const DyckPath& d, int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  if (d.length() != static_cast<std::size_t>(2 * n + 2))
    throw std::invalid_argument("path has length " + std::to_string(d.length()) + ", expected 2n+2 = " +
                                std::to_string(2 * n + 2));

  std::vector<Step> steps = d.steps();
  // Peel stages off the top; words[0] belongs to the last rectangle processed.
  std::vector<std::vector<int>> words;
  for (int m = height(d); m >= 2; --m) {
    std::vector<int> a;
    std::vector<Step> flat;
    int y = 0;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const int next = y + (steps[i] == Step::Up ? 1 : -1);
      if (next == m) {
        // A UD excursion above level m-1: drop it, count it for this group.
        ++a.back();
        ++i;
        continue;
      }
      flat.push_back(steps[i]);
      if (next == m - 1 && steps[i] == Step::Up) a.push_back(0);
      y = next;
    }
    words.push_back(std::move(a));
    steps = std::move(flat);
  }
  std::reverse(words.begin(), words.end());  // processing order, rectangle k first

  const int k = static_cast<int>(words.size());
  std::vector<int> idx(static_cast<std::size_t>(k + 1), 0);  // idx[j] = i_j
  if (k > 0) {
    idx[static_cast<std::size_t>(k)] = n + 1 - static_cast<int>(steps.size() / 2);
    for (int j = k; j >= 1; --j) {
      int c = 0;
      for (int v : words[static_cast<std::size_t>(k - j)]) c += v;
      idx[static_cast<std::size_t>(j - 1)] = idx[static_cast<std::size_t>(j)] - c;
    }
    if (idx[0] != 0) throw std::logic_error("inverse bijection: column widths do not add up");
  }

  std::vector<int> parts(static_cast<std::size_t>(n), 0);
  auto set_row = [&](int row, int value) {
    if (row >= 1 && row <= n) parts[static_cast<std::size_t>(row - 1)] = value;
  };
  if (k > 0) {
    TouchSequence ts{n, std::vector<int>(idx.begin() + 1, idx.end())};
    const std::vector<Rectangle> rects = rectangles(ts);
    set_row(1, idx[static_cast<std::size_t>(k)]);
    for (std::size_t r = 0; r < rects.size(); ++r) {
      const Rectangle& rect = rects[r];
      const std::vector<int>& a = words[r];
      if (static_cast<int>(a.size()) != rect.rows + 1)
        throw std::logic_error("inverse bijection: peak count does not match rectangle height");
      int mu = 0;
      for (int s = rect.rows; s >= 1; --s) {
        mu += a[static_cast<std::size_t>(s)];
        set_row(rect.first_row + s - 1, rect.col_offset + mu);
      }
      // The row just below the rectangle sits on the next touch point.
      const int j = k - static_cast<int>(r);
      set_row(n - idx[static_cast<std::size_t>(j)] + 2, idx[static_cast<std::size_t>(j - 1)]);
    }
  }
  return StaircasePartition::make(parts, n);
}

std::vector<DyckPath> enumerate_dyck_paths(int semilength) {
  std::vector<DyckPath> out;
  std::vector<Step> cur;
  auto rec = [&](auto&& self, int ups, int downs) -> void {
    if (ups == semilength && downs == semilength) {
      out.emplace_back(cur);
      return;
    }
    if (ups < semilength) {
      cur.push_back(Step::Up);
      self(self, ups + 1, downs);
      cur.pop_back();
    }
    if (downs < ups) {
      cur.push_back(Step::Down);
      self(self, ups, downs + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace adnil
