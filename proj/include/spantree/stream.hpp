#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spantree/graph.hpp"

namespace spantree {

// Receives solution parts (tree edges) one at a time, in emission order.
class EmissionSink {
 public:
  virtual ~EmissionSink() = default;
  virtual void accept(const EdgeRef& edge) = 0;
};

// Records edges plus a steady-clock timestamp per emission, measured from
// construction. Construct it immediately before starting the algorithm.
class CollectingSink : public EmissionSink {
 public:
  CollectingSink() : start_(std::chrono::steady_clock::now()) {}

  void accept(const EdgeRef& edge) override {
    timestamps_ns_.push_back(now_ns());
    edges_.push_back(edge);
  }

  const std::vector<EdgeRef>& edges() const { return edges_; }
  const std::vector<std::uint64_t>& timestamps_ns() const { return timestamps_ns_; }

  std::uint64_t elapsed_ns() const { return now_ns(); }

 private:
  std::uint64_t now_ns() const {
    return static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(
            std::chrono::steady_clock::now() - start_)
            .count());
  }

  std::chrono::steady_clock::time_point start_;
  std::vector<EdgeRef> edges_;
  std::vector<std::uint64_t> timestamps_ns_;
};

class CountingSink : public EmissionSink {
 public:
  void accept(const EdgeRef&) override { ++count_; }
  std::size_t count() const { return count_; }

 private:
  std::size_t count_ = 0;
};

class ForwardingSink : public EmissionSink {
 public:
  explicit ForwardingSink(std::function<void(const EdgeRef&)> fn) : fn_(std::move(fn)) {}
  void accept(const EdgeRef& edge) override { fn_(edge); }

 private:
  std::function<void(const EdgeRef&)> fn_;
};

// FIFO buffer for computed-but-not-yet-emitted edges during finalization.
class SolutionQueue {
 public:
  void push(const EdgeRef& e) {
    queue_.push_back(e);
    if (queue_.size() > peak_) peak_ = queue_.size();
  }

  EdgeRef pop() {
    if (queue_.empty()) throw std::logic_error("SolutionQueue: pop on empty queue");
    EdgeRef e = queue_.front();
    queue_.pop_front();
    return e;
  }

  bool empty() const { return queue_.empty(); }
  std::size_t size() const { return queue_.size(); }
  std::size_t peak_size() const { return peak_; }

 private:
  std::deque<EdgeRef> queue_;
  std::size_t peak_ = 0;
};

struct StreamMetrics {
  std::uint64_t first_output_ns = 0;
  std::uint64_t max_delay_ns = 0;
  std::uint64_t max_incremental_delay_ns = 0;
  std::uint64_t total_time_ns = 0;
  std::size_t emission_count = 0;
};

// timestamps are elapsed ns at each emission, nondecreasing, within total.
// Incremental delay is max over k of elapsed(k)/k rounded up, which makes
// elapsed(k) <= k * max_incremental_delay hold for every k.
inline StreamMetrics metrics_from_timestamps(const std::vector<std::uint64_t>& timestamps,
                                             std::uint64_t total_ns) {
  if (timestamps.empty())
    throw std::invalid_argument("metrics need at least one emission");
  StreamMetrics m;
  m.emission_count = timestamps.size();
  m.first_output_ns = timestamps.front();
  m.total_time_ns = total_ns;
  std::uint64_t prev = 0;
  for (std::size_t k = 1; k <= timestamps.size(); ++k) {
    std::uint64_t t = timestamps[k - 1];
    if (t < prev) throw std::invalid_argument("emission timestamps must be nondecreasing");
    std::uint64_t gap = t - prev;
    if (gap > m.max_delay_ns) m.max_delay_ns = gap;
    std::uint64_t inc = (t + k - 1) / k;
    if (inc > m.max_incremental_delay_ns) m.max_incremental_delay_ns = inc;
    prev = t;
  }
  if (prev > total_ns)
    throw std::invalid_argument("last emission is past the total time");
  return m;
}

}  // namespace spantree
