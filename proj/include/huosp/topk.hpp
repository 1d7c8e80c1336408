#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace huosp {

/// Keeps the k largest values pushed into it (bounded min-heap).
class BoundedTopK {
public:
    explicit BoundedTopK(std::size_t k) : k_(k) {}

    void push(double v) {
        if (k_ == 0) return;
        if (heap_.size() < k_) {
            heap_.push_back(v);
            std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
        } else if (v > heap_.front()) {
            std::pop_heap(heap_.begin(), heap_.end(), std::greater<>());
            heap_.back() = v;
            std::push_heap(heap_.begin(), heap_.end(), std::greater<>());
        }
    }

    double sum() const {
        double s = 0.0;
        for (double v : heap_) s += v;
        return s;
    }

    std::size_t size() const { return heap_.size(); }

    /// Retained values in descending order.
    std::vector<double> descending() const {
        std::vector<double> v = heap_;
        std::sort(v.begin(), v.end(), std::greater<>());
        return v;
    }

private:
    std::size_t k_;
    std::vector<double> heap_;
};

}  // namespace huosp
