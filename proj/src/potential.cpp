#include "darboux/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "darboux/errors.hpp"

namespace darboux {

std::string to_string(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::zero: return "zero";
        case PotentialKind::square_well: return "square_well";
        case PotentialKind::user_table: return "user_table";
    }
    return "unknown";
}

Potential Potential::zero() { return Potential{}; }

Potential Potential::square_well(double depth, double width) {
    if (!(width > 0.0)) throw InvalidArgument("square well width must be positive");
    if (!std::isfinite(depth)) throw InvalidArgument("square well depth must be finite");
    Potential v;
    v.kind_ = PotentialKind::square_well;
    v.depth_ = depth;
    v.width_ = width;
    v.breakpoints_ = {width};
    v.decay_radius_ = width;
    v.support_end_ = width;
    return v;
}

Potential Potential::from_table(std::vector<double> xs, std::vector<double> vs, double tol_asym) {
    if (xs.size() != vs.size()) throw InvalidArgument("potential table columns differ in length");
    if (xs.size() < 2) throw InvalidArgument("potential table needs at least two rows");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(vs[i]))
            throw InvalidArgument("potential table contains a non-finite entry");
        if (i > 0 && !(xs[i] > xs[i - 1]))
            throw InvalidArgument("potential table x column must be strictly increasing (row " +
                                  std::to_string(i + 1) + ")");
    }
    if (xs.front() < 0.0) throw InvalidArgument("potential table starts at negative x");

    Potential v;
    v.kind_ = PotentialKind::user_table;
    v.table_x_ = std::move(xs);
    v.table_v_ = std::move(vs);
    const auto& tx = v.table_x_;
    const auto& tv = v.table_v_;
    for (double x : tx)
        if (x > 0.0) v.breakpoints_.push_back(x);

    // Last node where the potential is not (numerically) zero.
    std::ptrdiff_t last_big = -1, last_nonzero = -1;
    for (std::size_t i = 0; i < tv.size(); ++i) {
        if (std::abs(tv[i]) >= tol_asym) last_big = static_cast<std::ptrdiff_t>(i);
        if (tv[i] != 0.0) last_nonzero = static_cast<std::ptrdiff_t>(i);
    }
    auto next_node = [&](std::ptrdiff_t i) {
        return i < 0 ? 0.0 : tx[std::min<std::size_t>(static_cast<std::size_t>(i) + 1, tx.size() - 1)];
    };
    v.decay_radius_ = next_node(last_big);
    v.support_end_ = next_node(last_nonzero);
    return v;
}

Potential Potential::load_table(const std::filesystem::path& path, double tol_asym) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open potential table '" + path.string() + "'");
    std::vector<double> xs, vs;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        double x, val;
        if (!(row >> x)) continue;
        if (!(row >> val))
            throw InvalidArgument(path.string() + ":" + std::to_string(line_no) + ": expected two columns");
        std::string extra;
        if (row >> extra)
            throw InvalidArgument(path.string() + ":" + std::to_string(line_no) + ": more than two columns");
        xs.push_back(x);
        vs.push_back(val);
    }
    return from_table(std::move(xs), std::move(vs), tol_asym);
}

double Potential::operator()(double x) const {
    switch (kind_) {
        case PotentialKind::zero: return 0.0;
        case PotentialKind::square_well: return x < width_ ? -depth_ : 0.0;
        case PotentialKind::user_table: {
            if (x <= table_x_.front()) return table_v_.front();
            if (x >= table_x_.back()) return 0.0;
            auto it = std::upper_bound(table_x_.begin(), table_x_.end(), x);
            const std::size_t j = static_cast<std::size_t>(it - table_x_.begin());
            const double t = (x - table_x_[j - 1]) / (table_x_[j] - table_x_[j - 1]);
            return (1.0 - t) * table_v_[j - 1] + t * table_v_[j];
        }
    }
    return 0.0;
}

double Potential::value_on_piece(double x, double lo, double hi) const {
    return (*this)(std::clamp(x, lo, std::nextafter(hi, lo)));
}

}  // namespace darboux
