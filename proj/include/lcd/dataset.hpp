#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "lcd/graph.hpp"

namespace lcd {

// Columnar sample matrix with lazily computed sample correlation.
class Dataset {
public:
    Dataset(std::vector<std::string> columnNames, Eigen::MatrixXd values);

    int numRows() const { return static_cast<int>(values_.rows()); }
    int numCols() const { return static_cast<int>(values_.cols()); }
    const std::vector<std::string>& columnNames() const { return columnNames_; }
    int columnIndex(const std::string& name) const;
    const Eigen::MatrixXd& values() const { return values_; }
    Eigen::VectorXd column(int i) const { return values_.col(i); }

    const Eigen::MatrixXd& sampleCorrelation() const;

    // CSV with a header row of column names, one sample per row.
    static Dataset fromCsv(const std::string& text);
    static Dataset loadCsv(const std::string& path);
    std::string toCsv() const;
    void saveCsv(const std::string& path) const;

private:
    std::vector<std::string> columnNames_;
    Eigen::MatrixXd values_;
    mutable std::optional<Eigen::MatrixXd> correlation_;
};

}  // namespace lcd
