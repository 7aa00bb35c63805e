#ifndef QSNELL_TABLE_HPP
#define QSNELL_TABLE_HPP

#include <ostream>
#include <string>
#include <variant>
#include <vector>

namespace qsnell
{

using Cell = std::variant<double, std::string>;

/// Column-ordered result table shared by every CLI command.
struct Table
{
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  [[nodiscard]] std::size_t column_index(const std::string& name) const;
  [[nodiscard]] double number(std::size_t row, const std::string& column) const;
  [[nodiscard]] const std::string& text(std::size_t row, const std::string& column) const;
};

/// Nine significant digits, '.' separator; non-finite values print as "nan", "inf", "-inf".
std::string format_number(double value);

/// Header row, then one line per row, '\n' endings.
void write_csv(const Table& table, std::ostream& out);
/// Array of records keyed by column name; non-finite numbers become null.
void write_json(const Table& table, std::ostream& out);

}  // namespace qsnell

#endif  // QSNELL_TABLE_HPP
