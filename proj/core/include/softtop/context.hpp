#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace softtop {

class Context;
using ContextPtr = std::shared_ptr<const Context>;

// A fixed pair (universe, parameter set). Both are ordered lists of distinct
// identifiers; every soft set, point, topology and mapping is anchored to one
// Context. Contexts are immutable and shared by pointer; equality is
// structural.
class Context {
 public:
  static ContextPtr make(std::vector<std::string> universe,
                         std::vector<std::string> params);

  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<std::string>& params() const { return params_; }

  std::size_t universe_size() const { return universe_.size(); }
  std::size_t param_count() const { return params_.size(); }
  // Width of the flattened bit encoding of a soft set over this context.
  std::size_t bit_width() const { return universe_.size() * params_.size(); }

  std::optional<std::size_t> element_index(std::string_view name) const;
  std::optional<std::size_t> param_index(std::string_view name) const;

  const std::string& element_name(std::size_t i) const { return universe_[i]; }
  const std::string& param_name(std::size_t i) const { return params_[i]; }

  bool operator==(const Context& other) const {
    return universe_ == other.universe_ && params_ == other.params_;
  }

 private:
  Context(std::vector<std::string> universe, std::vector<std::string> params);

  std::vector<std::string> universe_;
  std::vector<std::string> params_;
};

// Pointer equality first, structural equality as fallback.
bool same_context(const ContextPtr& a, const ContextPtr& b);
bool same_params(const ContextPtr& a, const ContextPtr& b);

// Throws ContextMismatch unless same_context(a, b).
void require_same_context(const ContextPtr& a, const ContextPtr& b);

// Display name for a tuple element, e.g. "(a,0)".
std::string tuple_name(std::span<const std::string> components);

}  // namespace softtop
