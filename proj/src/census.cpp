#include "surface_links/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <set>
#include <string>
#include <thread>

namespace surface_links {

int worker_count() {
  if (const char* env = std::getenv("SURFACE_LINKS_THREADS")) {
    int k = std::atoi(env);
    if (k > 0) return k;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(int count, const std::function<void(int)>& body) {
  const int workers = std::min(worker_count(), std::max(count, 1));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> guard(error_lock);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

// Grows rooted codes slot by slot: an open slot joins a new crossing at its
// slot 0 or a later open slot. Parities are forced by the colorability
// constraint parity[c] + parity[c'] = 1 + k + k' (mod 2) on every edge.
class ShadowGenerator {
 public:
  explicit ShadowGenerator(int n) : n_(n), partner_(4 * n, -1), parity_(n, 0) {}

  std::vector<Shadow> run() {
    if (n_ == 0) return {};
    made_ = 1;
    grow(0);
    return std::move(out_);
  }

 private:
  void grow(int pos) {
    while (pos < 4 * made_ && partner_[pos] >= 0) ++pos;
    if (pos == 4 * made_) {
      if (made_ == n_) emit();
      return;
    }
    const int c = crossing_of(pos), k = slot_of(pos);
    if (made_ < n_) {
      const int x = made_++;
      parity_[x] = (1 + k + parity_[c]) & 1;
      link(pos, dart_of(x, 0));
      grow(pos + 1);
      unlink(pos);
      --made_;
    }
    for (int d = pos + 1; d < 4 * made_; ++d) {
      if (partner_[d] >= 0) continue;
      if (((parity_[c] + parity_[crossing_of(d)] + 1 + k + slot_of(d)) & 1) != 0) continue;
      link(pos, d);
      grow(pos + 1);
      unlink(pos);
    }
  }

  void link(int a, int b) {
    partner_[a] = b;
    partner_[b] = a;
  }
  void unlink(int a) {
    partner_[partner_[a]] = -1;
    partner_[a] = -1;
  }

  void emit() {
    CombMap m = CombMap::from_partner(partner_);
    auto code = rooted_code(m, 0, false, false, false, true);
    for (int d = 1; d < m.dart_count(); ++d)
      if (rooted_code(m, d, false, false, false, true) < code) return;
    out_.push_back(Shadow{std::move(m), parity_});
  }

  int n_;
  int made_ = 0;
  std::vector<int> partner_;
  std::vector<int> parity_;
  std::vector<Shadow> out_;
};

CombMap decorate(const CombMap& shadow, const std::vector<int>& turn) {
  const int n = shadow.dart_count();
  std::vector<int> partner(n);
  auto moved = [&](int d) { return dart_of(crossing_of(d), slot_of(d) + turn[crossing_of(d)]); };
  for (int d = 0; d < n; ++d) partner[moved(d)] = moved(shadow.partner(d));
  return CombMap::from_partner(std::move(partner));
}

}  // namespace

std::vector<Shadow> colorable_shadows(int crossings) { return ShadowGenerator(crossings).run(); }

std::vector<CombMap> colorable_diagrams(int crossings, bool alternating_only) {
  const auto shadows = colorable_shadows(crossings);
  std::vector<std::vector<std::pair<std::string, CombMap>>> found(shadows.size());
  parallel_for(static_cast<int>(shadows.size()), [&](int i) {
    const auto& sh = shadows[i];
    std::set<std::string> seen;
    auto consider = [&](const std::vector<int>& turn) {
      CombMap m = decorate(sh.map, turn);
      std::string form = canonical_form(m);
      if (seen.insert(form).second) found[i].emplace_back(std::move(form), std::move(m));
    };
    if (alternating_only) {
      std::vector<int> turn = sh.parity;
      consider(turn);
      for (int& t : turn) t ^= 1;
      consider(turn);
      return;
    }
    for (int mask = 0; mask < (1 << crossings); ++mask) {
      std::vector<int> turn(crossings);
      for (int c = 0; c < crossings; ++c) turn[c] = (mask >> c) & 1;
      consider(turn);
    }
  });
  std::vector<std::pair<std::string, CombMap>> all;
  for (auto& f : found)
    for (auto& e : f) all.push_back(std::move(e));
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<CombMap> out;
  for (auto& e : all) out.push_back(std::move(e.second));
  return out;
}

std::vector<CombMap> census(int max_crossings, bool alternating_only) {
  std::vector<CombMap> out;
  for (int n = 1; n <= max_crossings; ++n) {
    auto part = colorable_diagrams(n, alternating_only);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

namespace {

void words(int n, std::vector<int>& w, std::vector<int>& open_count, int opened,
           std::vector<std::vector<int>>& out) {
  if (static_cast<int>(w.size()) == 2 * n) {
    out.push_back(w);
    return;
  }
  if (opened < n) {
    w.push_back(opened);
    open_count[opened] = 1;
    words(n, w, open_count, opened + 1, out);
    open_count[opened] = 0;
    w.pop_back();
  }
  for (int l = 0; l < opened; ++l) {
    if (open_count[l] != 1) continue;
    open_count[l] = 2;
    w.push_back(l);
    words(n, w, open_count, opened, out);
    w.pop_back();
    open_count[l] = 1;
  }
}

}  // namespace

std::vector<GaussCode> code_shadows(int crossings) {
  if (crossings <= 0) return {};
  std::vector<std::vector<int>> all_words;
  std::vector<int> w, open_count(crossings, 0);
  words(crossings, w, open_count, 0, all_words);
  const int len = 2 * crossings;
  std::set<std::string> seen;
  std::vector<GaussCode> out;
  for (const auto& word : all_words)
    for (int cuts = 0; cuts < (1 << (len - 1)); ++cuts) {
      GaussCode code;
      code.components.emplace_back();
      std::vector<int> seen_label(crossings, 0);
      for (int i = 0; i < len; ++i) {
        if (i > 0 && ((cuts >> (i - 1)) & 1)) code.components.emplace_back();
        code.components.back().push_back(GaussToken{seen_label[word[i]] == 0, word[i] + 1, 1});
        seen_label[word[i]] = 1;
      }
      if (seen.insert(canonical_shadow(code)).second) out.push_back(std::move(code));
    }
  return out;
}

std::vector<GaussCode> decorations(const GaussCode& shadow) {
  const int n = shadow.crossing_count();
  std::set<std::string> seen;
  std::vector<GaussCode> out;
  for (int mask = 0; mask < (1 << (2 * n)); ++mask) {
    GaussCode code = shadow;
    for (auto& comp : code.components)
      for (auto& t : comp) {
        int l = t.label - 1;
        bool first_over = ((mask >> (2 * l)) & 1) == 0;
        bool is_first = t.over;  // shadows mark first occurrences as over
        t.over = is_first == first_over;
        t.sign = ((mask >> (2 * l + 1)) & 1) ? -1 : 1;
      }
    if (seen.insert(canonical_gauss(code)).second) out.push_back(std::move(code));
  }
  return out;
}

}  // namespace surface_links
