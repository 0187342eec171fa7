#include "nsgp/covariety.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace nsgp {

namespace detail {

namespace {

// Runs fn(0..n-1) on up to `threads` workers; results must be written to
// per-index slots so the outcome does not depend on scheduling.
void for_each_index(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

struct Shoot {
  std::size_t parent;
  Int adjoined;
  NumericalSemigroup value;
  std::vector<Int> key;  // elements added to the root, ascending
};

bool shoot_less(const Shoot& a, const Shoot& b) { return a.key < b.key; }

}  // namespace

std::vector<Int> added_elements(const NumericalSemigroup& s, const NumericalSemigroup& root) {
  std::vector<Int> out;
  const Int horizon = std::max(s.frobenius(), root.frobenius());
  for (Int x = 0; x <= horizon; ++x)
    if (s.contains(x) && !root.contains(x)) out.push_back(x);
  return out;
}

CovarietyTree expand_tree(const NumericalSemigroup& root, const ChildFn& make_children,
                          const EnumerateOptions& options) {
  CovarietyTree tree;
  tree.vertices.push_back(root);
  tree.parent.push_back(kNoParent);
  tree.adjoined.push_back(-1);
  tree.level_start = {0, 1};

  if (options.traversal == Traversal::depth_first) {
    // Same vertex set as the level order below; entries are re-sorted into
    // the canonical (depth, added-set) layout afterwards.
    struct Entry {
      std::size_t id, parent_id;
      std::size_t depth;
      Int adjoined;
      NumericalSemigroup value;
      std::vector<Int> key;
    };
    std::vector<Entry> entries;
    entries.push_back({0, kNoParent, 0, -1, root, {}});
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
      const std::size_t at = stack.back();
      stack.pop_back();
      auto kids = make_children(entries[at].value);
      for (auto& [x, child] : kids) {
        std::vector<Int> key{x};
        key.insert(key.end(), entries[at].key.begin(), entries[at].key.end());
        const std::size_t id = entries.size();
        entries.push_back({id, at, entries[at].depth + 1, x, std::move(child), std::move(key)});
        stack.push_back(id);
      }
    }
    std::sort(entries.begin() + 1, entries.end(), [](const Entry& a, const Entry& b) {
      return a.depth != b.depth ? a.depth < b.depth : a.key < b.key;
    });
    std::vector<std::size_t> index_of(entries.size(), 0);
    tree.vertices.clear();
    tree.parent.clear();
    tree.adjoined.clear();
    tree.level_start.assign(1, 0);
    std::size_t depth = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const Entry& e = entries[i];
      index_of[e.id] = i;
      while (e.depth > depth) {
        tree.level_start.push_back(i);
        ++depth;
      }
      tree.vertices.push_back(e.value);
      tree.parent.push_back(e.parent_id == kNoParent ? kNoParent : index_of[e.parent_id]);
      tree.adjoined.push_back(e.adjoined);
    }
    tree.level_start.push_back(tree.vertices.size());
    return tree;
  }

  // Breadth first, one genus level at a time.
  std::vector<std::vector<Int>> keys{{}};
  std::size_t begin = 0, end = 1;
  while (begin < end) {
    std::vector<std::vector<Shoot>> batches(end - begin);
    for_each_index(end - begin, options.threads, [&](std::size_t i) {
      const std::size_t v = begin + i;
      auto kids = make_children(tree.vertices[v]);
      batches[i].reserve(kids.size());
      for (auto& [x, child] : kids) {
        std::vector<Int> key{x};
        key.insert(key.end(), keys[v].begin(), keys[v].end());
        batches[i].push_back({v, x, std::move(child), std::move(key)});
      }
    });
    std::vector<Shoot> level;
    for (auto& batch : batches)
      for (auto& shoot : batch) level.push_back(std::move(shoot));
    if (level.empty()) break;
    std::sort(level.begin(), level.end(), shoot_less);
    for (auto& shoot : level) {
      tree.vertices.push_back(std::move(shoot.value));
      tree.parent.push_back(shoot.parent);
      tree.adjoined.push_back(shoot.adjoined);
      keys.push_back(std::move(shoot.key));
    }
    begin = end;
    end = tree.vertices.size();
    tree.level_start.push_back(end);
  }
  return tree;
}

std::vector<NumericalSemigroup> advance_level(const std::vector<NumericalSemigroup>& level,
                                              const NumericalSemigroup& root,
                                              const ChildFn& make_children, int threads) {
  std::vector<std::vector<Shoot>> batches(level.size());
  for_each_index(level.size(), threads, [&](std::size_t i) {
    auto kids = make_children(level[i]);
    batches[i].reserve(kids.size());
    for (auto& [x, child] : kids) {
      std::vector<Int> key = added_elements(child, root);
      batches[i].push_back({i, x, std::move(child), std::move(key)});
    }
  });
  std::vector<Shoot> merged;
  for (auto& batch : batches)
    for (auto& shoot : batch) merged.push_back(std::move(shoot));
  std::sort(merged.begin(), merged.end(), shoot_less);
  std::vector<NumericalSemigroup> out;
  out.reserve(merged.size());
  for (auto& shoot : merged) out.push_back(std::move(shoot.value));
  return out;
}

}  // namespace detail

namespace {

detail::ChildFn descriptor_children(const CovarietyDescriptor& r) {
  return [&r](const NumericalSemigroup& s) {
    std::vector<std::pair<Int, NumericalSemigroup>> out;
    const Int m = s.multiplicity();
    const Int ratio = s.ratio();
    for (Int x : s.special_gaps()) {
      if (x <= m || x >= ratio) continue;
      NumericalSemigroup child = s.adjoin(x);
      if (r.member(child)) out.emplace_back(x, std::move(child));
    }
    return out;
  };
}

}  // namespace

std::vector<NumericalSemigroup> children(const NumericalSemigroup& s,
                                         const CovarietyDescriptor& r) {
  if (!r.member(s)) throw std::domain_error("the semigroup is not a member of the family");
  if (s.is_naturals()) throw std::domain_error("N cannot be a vertex of a ratio-covariety tree");
  std::vector<NumericalSemigroup> out;
  for (auto& [x, child] : descriptor_children(r)(s)) out.push_back(std::move(child));
  return out;
}

CovarietyTree enumerate_tree(const CovarietyDescriptor& r, const EnumerateOptions& options) {
  if (r.minimum.is_naturals())
    throw std::domain_error("the minimum of a ratio-covariety must differ from N");
  if (!r.member || !r.member(r.minimum))
    throw std::domain_error("descriptor error: the minimum is not a member of its own family");
  return detail::expand_tree(r.minimum, descriptor_children(r), options);
}

std::vector<NumericalSemigroup> ratio_chain(const NumericalSemigroup& s) {
  if (s.is_naturals()) throw std::domain_error("the ratio chain is undefined for N");
  const NumericalSemigroup target =
      NumericalSemigroup::delta(s.frobenius(), s.multiplicity());
  const std::size_t steps = static_cast<std::size_t>(s.a_set().size());
  std::vector<NumericalSemigroup> chain{s};
  chain.reserve(steps + 1);
  while (chain.back() != target) {
    if (chain.size() > steps + 1) throw std::logic_error("ratio chain failed to reach delta");
    chain.push_back(chain.back().remove_ratio());
  }
  return chain;
}

AxiomReport verify_axioms(const CovarietyTree& tree) {
  AxiomReport report;
  const auto& vs = tree.vertices;
  std::unordered_set<NumericalSemigroup, SemigroupHash> members(vs.begin(), vs.end());

  report.minimum_ok = true;
  for (const auto& v : vs)
    if (!subset_of(tree.root(), v)) report.minimum_ok = false;

  report.intersection_ok = true;
  for (std::size_t i = 0; i < vs.size() && report.intersection_ok; ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!members.count(intersect(vs[i], vs[j]))) {
        report.intersection_ok = false;
        break;
      }

  report.ratio_removal_ok = true;
  for (std::size_t i = 1; i < vs.size(); ++i) {
    if (!members.count(vs[i].remove_ratio())) report.ratio_removal_ok = false;
    if (tree.parent[i] == kNoParent || vs[tree.parent[i]] != vs[i].remove_ratio())
      report.ratio_removal_ok = false;
  }
  return report;
}

}  // namespace nsgp
