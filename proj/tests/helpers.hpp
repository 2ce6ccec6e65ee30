#pragma once

#include <doctest.h>

#include <random>
#include <string>

#include "svtab/error.hpp"
#include "svtab/integer.hpp"
#include "svtab/tableau.hpp"

// Checks that `expr` throws svtab::Error with the given code.
#define CHECK_ERRC(expr, errc)                          \
  do {                                                  \
    bool thrown_ = false;                               \
    try {                                               \
      (void)(expr);                                     \
    } catch (const svtab::Error& e_) {                  \
      thrown_ = true;                                   \
      CHECK(e_.code() == (errc));                       \
    }                                                   \
    CHECK_MESSAGE(thrown_, "expected " #errc);          \
  } while (0)

inline svtab::SetValuedTableau tab(svtab::TableauRows rows) { return svtab::make_tableau(std::move(rows)); }

inline std::string str(const svtab::Integer& v) { return svtab::to_string(v); }

#include <fstream>
#include <sstream>
#include <vector>

#ifndef SVTAB_TEST_DATA_DIR
#define SVTAB_TEST_DATA_DIR "tests"
#endif

// Non-comment lines of a file under tests/.
inline std::vector<std::string> data_lines(const std::string& relative) {
  std::ifstream in(std::string(SVTAB_TEST_DATA_DIR) + "/" + relative);
  REQUIRE_MESSAGE(in.good(), "missing test data " << relative);
  std::vector<std::string> out;
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}
