#include "toda_rpp/toda/sample.hpp"

#include <map>
#include <mutex>
#include <tuple>

#include "toda_rpp/algebra/matrix.hpp"
#include "toda_rpp/algebra/parse.hpp"
#include "toda_rpp/errors.hpp"

namespace toda_rpp {

struct SampleFunction::Memo {
  std::mutex mutex;
  std::map<std::tuple<int, int, int>, Scalar> tau;
};

SampleFunction::SampleFunction(GridWindow window, std::vector<Scalar> row_major_values)
    : window_(window), values_(std::move(row_major_values)), memo_(std::make_shared<Memo>()) {
  if (window_.rows() <= 0 || window_.cols() <= 0) throw ShapeError("empty sample window");
  if (values_.size() != static_cast<std::size_t>(window_.rows()) * window_.cols()) {
    throw ShapeError("sample values do not fill the window");
  }
}

SampleFunction SampleFunction::from_function(GridWindow window, const std::function<Scalar(int, int)>& f) {
  std::vector<Scalar> values;
  for (int i = window.i0; i <= window.i1; ++i)
    for (int j = window.j0; j <= window.j1; ++j) values.push_back(f(i, j));
  return SampleFunction(window, std::move(values));
}

SampleFunction SampleFunction::random(GridWindow window, SeededRng& rng) {
  return from_function(window, [&](int, int) { return Scalar(rng.uniform_int(1, 9)); });
}

const Scalar& SampleFunction::at(int i, int j) const {
  if (!window_.contains(i, j)) {
    throw WindowError("f(" + std::to_string(i) + "," + std::to_string(j) + ") is outside the sample window");
  }
  return values_[static_cast<std::size_t>(i - window_.i0) * window_.cols() + (j - window_.j0)];
}

Scalar SampleFunction::tau(int s, int t, int n) const {
  if (n < 0) throw DomainError("negative tau order");
  if (n == 0) return Scalar(1);
  if (!window_.contains(s, t) || !window_.contains(s + n - 1, t + n - 1)) {
    throw WindowError("tau(" + std::to_string(s) + "," + std::to_string(t) + "," + std::to_string(n) + ") needs values outside the sample window");
  }
  const auto key = std::make_tuple(s, t, n);
  {
    std::lock_guard<std::mutex> lock(memo_->mutex);
    auto it = memo_->tau.find(key);
    if (it != memo_->tau.end()) return it->second;
  }
  Matrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = at(s + i, t + j);
  Scalar d = det_exact(m);
  std::lock_guard<std::mutex> lock(memo_->mutex);
  return memo_->tau.emplace(key, std::move(d)).first->second;
}

nlohmann::json SampleFunction::to_json() const {
  nlohmann::json values = nlohmann::json::array();
  for (const auto& v : values_) values.push_back(v.to_string());
  return {{"window", {{"rows", {window_.i0, window_.i1}}, {"cols", {window_.j0, window_.j1}}}}, {"values", values}};
}

SampleFunction SampleFunction::from_json(const nlohmann::json& j) {
  const auto& w = j.at("window");
  GridWindow window{w.at("rows").at(0).get<int>(), w.at("rows").at(1).get<int>(), w.at("cols").at(0).get<int>(),
                    w.at("cols").at(1).get<int>()};
  std::vector<Scalar> values;
  for (const auto& v : j.at("values")) values.push_back(parse_scalar(v.get<std::string>()));
  return SampleFunction(window, std::move(values));
}

}  // namespace toda_rpp
