#pragma once

#include <doctest.h>

#include <vector>

#include "cusp/error.hpp"
#include "cusp/semigroup.hpp"

#define CHECK_ERROR_CODE(expr, expected)                          \
  do {                                                            \
    bool thrown_ = false;                                         \
    try {                                                         \
      (void)(expr);                                               \
    } catch (const cusp::Error& e_) {                             \
      thrown_ = true;                                             \
      CHECK_MESSAGE(e_.code() == (expected), e_.what());          \
    }                                                             \
    CHECK_MESSAGE(thrown_, "expected cusp::Error from " #expr);   \
  } while (false)

inline cusp::CharSeq cs(std::int64_t p, std::vector<std::int64_t> q) { return cusp::validate_char_seq(p, q); }
