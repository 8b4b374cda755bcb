#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>

namespace climakg {

using Date = std::chrono::year_month_day;

// Parses a strict YYYY-MM-DD calendar date. Returns nullopt for anything else,
// including impossible dates such as 1980-02-30.
std::optional<Date> ParseIsoDate(std::string_view text);

std::string FormatIsoDate(const Date& date);

int YearOf(const Date& date);
unsigned MonthOf(const Date& date);
unsigned DayOf(const Date& date);

// 1-based ordinal day within the year (1..366).
int DayOfYear(const Date& date);
int DaysInYear(int year);
Date DateFromDayOfYear(int year, int day_of_year);

}  // namespace climakg
