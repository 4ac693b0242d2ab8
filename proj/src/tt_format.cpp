#include "tensorfractal/tt_format.hpp"

#include <string>

namespace tensorfractal {

TTCore::TTCore(IntTensor data) : data_(std::move(data)) {
  if (data_.order() != 3) {
    throw InvalidShape("a TT core must have order 3, got shape " + to_string(data_.shape()));
  }
}

TTCore TTCore::from_blocks(const std::vector<std::vector<std::vector<std::int64_t>>>& blocks) {
  if (blocks.empty() || blocks.front().empty() || blocks.front().front().empty()) {
    throw InvalidShape("empty TT core block layout");
  }
  const std::size_t left = blocks.size();
  const std::size_t right = blocks.front().size();
  const std::size_t n = blocks.front().front().size();
  IntTensor data(Shape{left, n, right});
  for (std::size_t a = 0; a < left; ++a) {
    if (blocks[a].size() != right) throw InvalidShape("ragged TT core block rows");
    for (std::size_t b = 0; b < right; ++b) {
      if (blocks[a][b].size() != n) throw InvalidShape("TT core mode vectors differ in length");
      for (std::size_t x = 0; x < n; ++x) data[(a * n + x) * right + b] = blocks[a][b][x];
    }
  }
  return TTCore(std::move(data));
}

RowMajorMatrix<std::int64_t> TTCore::mode_sum() const {
  RowMajorMatrix<std::int64_t> m = RowMajorMatrix<std::int64_t>::Zero(
      static_cast<Eigen::Index>(left_rank()), static_cast<Eigen::Index>(right_rank()));
  for (std::size_t a = 0; a < left_rank(); ++a)
    for (std::size_t x = 0; x < mode_size(); ++x)
      for (std::size_t b = 0; b < right_rank(); ++b) m(a, b) += (*this)(a, x, b);
  return m;
}

TTTensor::TTTensor(std::vector<TTCore> cores) : cores_(std::move(cores)) {
  if (cores_.empty()) throw InvalidOrder("a tensor train needs at least one core");
  if (cores_.front().left_rank() != 1 || cores_.back().right_rank() != 1) {
    throw RankChainBroken("boundary ranks must be 1, got r_0 = " +
                          std::to_string(cores_.front().left_rank()) + " and r_d = " +
                          std::to_string(cores_.back().right_rank()));
  }
  for (std::size_t i = 0; i + 1 < cores_.size(); ++i) {
    if (cores_[i].right_rank() != cores_[i + 1].left_rank()) {
      throw RankChainBroken("core " + std::to_string(i + 1) + " has right rank " +
                            std::to_string(cores_[i].right_rank()) + " but core " +
                            std::to_string(i + 2) + " has left rank " +
                            std::to_string(cores_[i + 1].left_rank()));
    }
  }
}

std::vector<std::size_t> TTTensor::mode_sizes() const {
  std::vector<std::size_t> n;
  for (const auto& c : cores_) n.push_back(c.mode_size());
  return n;
}

std::vector<std::size_t> TTTensor::ranks() const {
  std::vector<std::size_t> r{cores_.front().left_rank()};
  for (const auto& c : cores_) r.push_back(c.right_rank());
  return r;
}

IntTensor contract(const TTTensor& tt) {
  using Mat = RowMajorMatrix<std::int64_t>;
  Shape shape(tt.mode_sizes());

  // partial holds the first i modes flattened into rows, the open rank in
  // columns. Multiplying by the next core unfolded as r x (n r') and
  // reinterpreting row-major as (rows n) x r' appends one mode.
  Mat partial = Mat::Ones(1, 1);
  for (const auto& core : tt.cores()) {
    const auto r_left = static_cast<Eigen::Index>(core.left_rank());
    const auto n = static_cast<Eigen::Index>(core.mode_size());
    const auto r_right = static_cast<Eigen::Index>(core.right_rank());
    Eigen::Map<const Mat> unfolded(core.data().data().data(), r_left, n * r_right);
    Mat next = partial * unfolded;
    partial = Eigen::Map<Mat>(next.data(), partial.rows() * n, r_right);
  }

  IntTensor out(std::move(shape));
  Eigen::Map<Mat>(out.data().data(), static_cast<Eigen::Index>(out.size()), 1) = partial;
  return out;
}

TTTensor multisponge_tt(std::size_t d) {
  if (d < 2) throw InvalidOrder("multisponge needs order d >= 2, got " + std::to_string(d));
  const std::vector<std::int64_t> full{1, 1, 1}, ends{1, 0, 1}, middle{0, 1, 0}, none{0, 0, 0};

  std::vector<TTCore> cores;
  cores.push_back(TTCore::from_blocks({{full, ends}}));
  for (std::size_t i = 0; i + 2 < d; ++i) cores.push_back(TTCore::from_blocks({{ends, none}, {middle, ends}}));
  cores.push_back(TTCore::from_blocks({{ends}, {middle}}));
  return TTTensor(std::move(cores));
}

std::int64_t tt_mode_sums(const TTTensor& tt) {
  RowMajorMatrix<std::int64_t> chain = RowMajorMatrix<std::int64_t>::Ones(1, 1);
  for (const auto& core : tt.cores()) chain = chain * core.mode_sum();
  return chain(0, 0);
}

}  // namespace tensorfractal
