#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace hammock::detail {

inline std::size_t worker_count(std::size_t tasks) {
  std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(hw, tasks));
}

// Runs body(state, i) for i in [0, tasks) on a small pool. Each worker owns
// one State created by init(); the states are returned for merging, so the
// caller controls reduction order.
template <typename Init, typename Body>
auto parallel_states(std::size_t tasks, Init init, Body body) {
  using State = decltype(init());
  const std::size_t workers = worker_count(tasks);
  std::vector<State> states;
  states.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) states.push_back(init());

  std::atomic<std::size_t> next{0};
  auto run = [&](State& state) {
    for (std::size_t i = next.fetch_add(1); i < tasks; i = next.fetch_add(1)) {
      body(state, i);
    }
  };
  if (workers == 1) {
    run(states[0]);
    return states;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) {
    pool.emplace_back([&, w] { run(states[w]); });
  }
  run(states[0]);
  pool.clear();  // joins
  return states;
}

}  // namespace hammock::detail
