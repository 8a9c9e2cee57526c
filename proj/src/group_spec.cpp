#include "gpw/group_spec.hpp"

#include <charconv>
#include <stdexcept>

namespace gpw {

Order Order::finite(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("vertex group order must be at least 2");
  return Order(m);
}

std::string Order::str() const { return is_infinite() ? "inf" : std::to_string(m_); }

Order Order::parse(const std::string& text) {
  if (text == "inf" || text == "oo" || text == "infinity") return infinite();
  std::uint64_t m = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), m);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw std::invalid_argument("bad order '" + text + "'");
  }
  return finite(m);
}

GroupSpec::GroupSpec(SimpleGraph graph, std::vector<Order> orders)
    : graph_(std::move(graph)), orders_(std::move(orders)) {
  if (orders_.size() != graph_.size()) {
    throw std::invalid_argument("every vertex needs an order");
  }
}

GroupSpec GroupSpec::uniform(SimpleGraph graph, Order order) {
  std::vector<Order> orders(graph.size(), order);
  return GroupSpec(std::move(graph), std::move(orders));
}

VertexMask GroupSpec::finite_part() const {
  VertexMask m = 0;
  for (std::size_t v = 0; v < orders_.size(); ++v) {
    if (orders_[v].is_finite()) m |= bit(v);
  }
  return m;
}

}  // namespace gpw
