#include "qsnell/table.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

namespace qsnell
{

void Table::add_row(std::vector<Cell> row)
{
  if (row.size() != columns.size())
  {
    throw std::logic_error("row width does not match the table header");
  }
  rows.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string& name) const
{
  for (std::size_t i = 0; i < columns.size(); ++i)
  {
    if (columns[i] == name)
    {
      return i;
    }
  }
  throw std::out_of_range("no column named '" + name + "'");
}

double Table::number(std::size_t row, const std::string& column) const
{
  return std::get<double>(rows.at(row).at(column_index(column)));
}

const std::string& Table::text(std::size_t row, const std::string& column) const
{
  return std::get<std::string>(rows.at(row).at(column_index(column)));
}

std::string format_number(double value)
{
  if (std::isnan(value))
  {
    return "nan";
  }
  if (std::isinf(value))
  {
    return value > 0 ? "inf" : "-inf";
  }
  if (value == 0.0)
  {
    value = 0.0;  // drop the sign of -0
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

namespace
{

std::string csv_cell(const Cell& cell)
{
  if (const auto* d = std::get_if<double>(&cell))
  {
    return format_number(*d);
  }
  return std::get<std::string>(cell);
}

}  // namespace

void write_csv(const Table& table, std::ostream& out)
{
  for (std::size_t i = 0; i < table.columns.size(); ++i)
  {
    out << (i ? "," : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows)
  {
    for (std::size_t i = 0; i < row.size(); ++i)
    {
      out << (i ? "," : "") << csv_cell(row[i]);
    }
    out << '\n';
  }
}

void write_json(const Table& table, std::ostream& out)
{
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& row : table.rows)
  {
    nlohmann::ordered_json record = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i)
    {
      const std::string& key = table.columns[i];
      if (const auto* d = std::get_if<double>(&row[i]))
      {
        if (std::isfinite(*d))
        {
          // same rounding as the CSV output
          record[key] = std::strtod(format_number(*d).c_str(), nullptr);
        }
        else
        {
          record[key] = nullptr;
        }
      }
      else
      {
        record[key] = std::get<std::string>(row[i]);
      }
    }
    records.push_back(std::move(record));
  }
  out << records.dump(2) << '\n';
}

}  // namespace qsnell
