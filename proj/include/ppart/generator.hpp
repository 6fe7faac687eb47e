#pragma once

#include <coroutine>
#include <exception>
#include <iterator>
#include <optional>
#include <utility>

namespace ppart {

// Minimal pull-based coroutine generator. Values are copied out on
// dereference; nesting is done by iterating an inner generator inside
// the outer coroutine body.
template <typename T>
class Generator {
 public:
  struct promise_type {
    std::optional<T> current;
    std::exception_ptr error;

    Generator get_return_object() {
      return Generator{std::coroutine_handle<promise_type>::from_promise(*this)};
    }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    template <typename U>
    std::suspend_always yield_value(U&& value) {
      current.emplace(std::forward<U>(value));
      return {};
    }
    void return_void() noexcept {}
    void unhandled_exception() { error = std::current_exception(); }
  };

  using handle_type = std::coroutine_handle<promise_type>;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = T;
    using difference_type = std::ptrdiff_t;
    using reference = const T&;
    using pointer = const T*;

    iterator() = default;
    explicit iterator(handle_type h) : handle_(h) {}

    reference operator*() const { return *handle_.promise().current; }
    pointer operator->() const { return &*handle_.promise().current; }
    iterator& operator++() {
      advance(handle_);
      return *this;
    }
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const {
      return !handle_ || handle_.done();
    }

   private:
    handle_type handle_{};
  };

  Generator() = default;
  Generator(const Generator&) = delete;
  Generator& operator=(const Generator&) = delete;
  Generator(Generator&& other) noexcept : handle_(std::exchange(other.handle_, {})) {}
  Generator& operator=(Generator&& other) noexcept {
    if (this != &other) {
      reset();
      handle_ = std::exchange(other.handle_, {});
    }
    return *this;
  }
  ~Generator() { reset(); }

  iterator begin() {
    if (handle_ && !started_) {
      started_ = true;
      advance(handle_);
    }
    return iterator{handle_};
  }
  std::default_sentinel_t end() const noexcept { return {}; }

 private:
  explicit Generator(handle_type h) : handle_(h) {}

  static void advance(handle_type h) {
    h.promise().current.reset();
    h.resume();
    if (h.promise().error) std::rethrow_exception(h.promise().error);
  }

  void reset() {
    if (handle_) handle_.destroy();
    handle_ = {};
  }

  handle_type handle_{};
  bool started_ = false;
};

}  // namespace ppart
