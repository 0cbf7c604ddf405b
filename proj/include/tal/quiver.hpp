#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace tal {

struct Arrow {
  std::string id;
  std::string from;
  std::string to;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

class ExchangeMatrix;

/// A finite quiver without loops and oriented 2-cycles. Parallel arrows in
/// the same direction are allowed. Immutable once constructed; the
/// constructor enforces every invariant and throws InvariantViolation.
class Quiver {
public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }

  bool has_vertex(const std::string& label) const { return index_.contains(label); }
  /// Position of `label` in vertices(); throws UnknownVertex.
  std::size_t index_of(const std::string& label) const;
  std::optional<std::size_t> find_arrow(const std::string& id) const;
  const Arrow& arrow(const std::string& id) const;

  /// Arrow ids leaving / entering `label`, in arrows() order.
  std::vector<std::string> out_arrows(const std::string& label) const;
  std::vector<std::string> in_arrows(const std::string& label) const;
  /// Number of arrows touching `label`.
  std::size_t degree(const std::string& label) const;

  /// Signed arrow count: #(from->to) - #(to->from).
  int multiplicity(const std::string& from, const std::string& to) const;

  ExchangeMatrix exchange_matrix() const;
  static Quiver from_exchange_matrix(std::vector<std::string> vertices,
                                     const ExchangeMatrix& b);

  /// Full subquiver on `keep` (order preserved from vertices()).
  Quiver induced(std::span<const std::string> keep) const;

  /// Exact equality: same vertex order, same arrow multiset including ids.
  friend bool operator==(const Quiver& a, const Quiver& b);

private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::unordered_map<std::string, std::size_t> index_;
  std::unordered_map<std::string, std::size_t> arrow_index_;
};

/// Skew-symmetric integer matrix B[i][j] = #(i->j) - #(j->i), stored row
/// major with rows padded to a multiple of 8 entries for the vector kernels.
class ExchangeMatrix {
public:
  static constexpr std::size_t kLane = 8;

  ExchangeMatrix() = default;
  explicit ExchangeMatrix(std::size_t n)
      : n_(n), stride_(padded(n)), data_(n * padded(n), 0) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t stride() const noexcept { return stride_; }

  std::int32_t operator()(std::size_t i, std::size_t j) const { return data_[i * stride_ + j]; }
  std::int32_t& operator()(std::size_t i, std::size_t j) { return data_[i * stride_ + j]; }

  std::span<std::int32_t> row(std::size_t i) { return {data_.data() + i * stride_, stride_}; }
  std::span<const std::int32_t> row(std::size_t i) const {
    return {data_.data() + i * stride_, stride_};
  }

  std::int32_t* data() noexcept { return data_.data(); }
  const std::int32_t* data() const noexcept { return data_.data(); }

  bool is_skew_symmetric() const;
  ExchangeMatrix permuted(std::span<const std::size_t> order) const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;

private:
  static std::size_t padded(std::size_t n) { return (n + kLane - 1) / kLane * kLane; }

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::int32_t> data_;
};

/// Quiver mutation at vertex `k`. Reversed arrows keep their id with "'" appended
/// (repeated until unique); arrows produced by composition through k get fresh
/// ids "c<n>".
/// When an existing arrow count shrinks, the lowest ids are removed first.
Quiver mutate(const Quiver& q, const std::string& k);

/// Mutation of the exchange matrix at index k, dispatched to the fastest
/// available kernel.
ExchangeMatrix mutate(const ExchangeMatrix& b, std::size_t k);

/// Replaces arrow ids by the deterministic "a<i>_<j>_<k>" scheme.
Quiver renormalized(const Quiver& q);

/// Renames vertices: `mapping[i]` is the new label of vertices()[i].
Quiver relabel(const Quiver& q, std::span<const std::string> mapping);

} // namespace tal
