#include "softtop/context.hpp"

#include <algorithm>
#include <unordered_set>

#include "softtop/errors.hpp"

namespace softtop {

namespace {

void check_identifier_list(const std::vector<std::string>& ids, const char* what) {
  if (ids.empty()) throw InvalidContext(std::string(what) + " must be non-empty");
  std::unordered_set<std::string_view> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second)
      throw InvalidContext(std::string("duplicate ") + what + " identifier: " + id);
  }
}

}  // namespace

Context::Context(std::vector<std::string> universe, std::vector<std::string> params)
    : universe_(std::move(universe)), params_(std::move(params)) {}

ContextPtr Context::make(std::vector<std::string> universe,
                         std::vector<std::string> params) {
  check_identifier_list(universe, "universe");
  check_identifier_list(params, "parameter");
  return ContextPtr(new Context(std::move(universe), std::move(params)));
}

std::optional<std::size_t> Context::element_index(std::string_view name) const {
  auto it = std::find(universe_.begin(), universe_.end(), name);
  if (it == universe_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - universe_.begin());
}

std::optional<std::size_t> Context::param_index(std::string_view name) const {
  auto it = std::find(params_.begin(), params_.end(), name);
  if (it == params_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - params_.begin());
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

bool same_params(const ContextPtr& a, const ContextPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->params() == b->params();
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (!same_context(a, b)) throw ContextMismatch("operands live in different contexts");
}

std::string tuple_name(std::span<const std::string> components) {
  std::string out = "(";
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) out += ",";
    out += components[i];
  }
  out += ")";
  return out;
}

}  // namespace softtop
