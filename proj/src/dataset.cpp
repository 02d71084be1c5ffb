#include "lcd/dataset.hpp"

#include <fstream>
#include <sstream>

namespace lcd {

Dataset::Dataset(std::vector<std::string> columnNames, Eigen::MatrixXd values)
    : columnNames_(std::move(columnNames)), values_(std::move(values)) {
    if (static_cast<int>(columnNames_.size()) != values_.cols()) {
        throw LcdError("dataset: column name count does not match value columns");
    }
    if (values_.rows() < 2) throw LcdError("dataset: needs at least two rows");
}

int Dataset::columnIndex(const std::string& name) const {
    for (size_t i = 0; i < columnNames_.size(); ++i) {
        if (columnNames_[i] == name) return static_cast<int>(i);
    }
    throw LcdError("dataset: unknown column " + name);
}

const Eigen::MatrixXd& Dataset::sampleCorrelation() const {
    if (!correlation_) {
        const int p = numCols();
        Eigen::MatrixXd centered = values_.rowwise() - values_.colwise().mean();
        Eigen::MatrixXd cov =
            centered.transpose() * centered / static_cast<double>(numRows() - 1);
        Eigen::VectorXd sd = cov.diagonal().cwiseMax(0.0).cwiseSqrt();
        Eigen::MatrixXd corr(p, p);
        for (int i = 0; i < p; ++i) {
            for (int j = 0; j < p; ++j) {
                double denom = sd(i) * sd(j);
                corr(i, j) = denom > 0.0 ? cov(i, j) / denom : (i == j ? 1.0 : 0.0);
            }
        }
        correlation_ = std::move(corr);
    }
    return *correlation_;
}

Dataset Dataset::fromCsv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw LcdError("csv: empty input");
    if (!line.empty() && line.back() == '\r') line.pop_back();

    std::vector<std::string> names;
    {
        std::istringstream header(line);
        std::string cell;
        while (std::getline(header, cell, ',')) names.push_back(cell);
    }
    const int p = static_cast<int>(names.size());
    std::vector<double> flat;
    int rows = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        int col = 0;
        while (std::getline(ls, cell, ',')) {
            flat.push_back(std::stod(cell));
            ++col;
        }
        if (col != p) throw LcdError("csv: ragged row");
        ++rows;
    }
    Eigen::MatrixXd values(rows, p);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < p; ++c) values(r, c) = flat[r * p + c];
    }
    return Dataset(std::move(names), std::move(values));
}

Dataset Dataset::loadCsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LcdError("cannot open csv: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return fromCsv(buf.str());
}

std::string Dataset::toCsv() const {
    std::ostringstream out;
    out.precision(17);
    for (size_t i = 0; i < columnNames_.size(); ++i) {
        if (i) out << ',';
        out << columnNames_[i];
    }
    out << '\n';
    for (int r = 0; r < numRows(); ++r) {
        for (int c = 0; c < numCols(); ++c) {
            if (c) out << ',';
            out << values_(r, c);
        }
        out << '\n';
    }
    return out.str();
}

void Dataset::saveCsv(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw LcdError("cannot write csv: " + path);
    out << toCsv();
}

}  // namespace lcd
