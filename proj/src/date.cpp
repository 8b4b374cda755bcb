#include "climakg/date.hpp"

#include <charconv>
#include <cstdio>

namespace climakg {

namespace {

bool ParseDigits(std::string_view text, int& out) {
  for (char c : text) {
    if (c < '0' || c > '9') return false;
  }
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

std::optional<Date> ParseIsoDate(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return std::nullopt;
  int y = 0, m = 0, d = 0;
  if (!ParseDigits(text.substr(0, 4), y) || !ParseDigits(text.substr(5, 2), m) ||
      !ParseDigits(text.substr(8, 2), d)) {
    return std::nullopt;
  }
  Date date{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
            std::chrono::day{static_cast<unsigned>(d)}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string FormatIsoDate(const Date& date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", YearOf(date), MonthOf(date),
                DayOf(date));
  return buf;
}

int YearOf(const Date& date) { return static_cast<int>(date.year()); }
unsigned MonthOf(const Date& date) { return static_cast<unsigned>(date.month()); }
unsigned DayOf(const Date& date) { return static_cast<unsigned>(date.day()); }

int DayOfYear(const Date& date) {
  using namespace std::chrono;
  const sys_days jan1{date.year() / January / 1};
  return static_cast<int>((sys_days{date} - jan1).count()) + 1;
}

int DaysInYear(int year) {
  return std::chrono::year{year}.is_leap() ? 366 : 365;
}

Date DateFromDayOfYear(int year, int day_of_year) {
  using namespace std::chrono;
  const sys_days jan1{std::chrono::year{year} / January / 1};
  return Date{jan1 + days{day_of_year - 1}};
}

}  // namespace climakg
