// Copyright (c) 2026 The numex Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Independent reference computations used by the tests.

#ifndef NUMEX_TESTS_ORACLES_H_
#define NUMEX_TESTS_ORACLES_H_

#include <cstdint>
#include <deque>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "numex/formatter.h"
#include "numex/locale.h"
#include "numex/types.h"

namespace numex::oracle {

using Sequence = std::vector<int>;

// All sequences over {0..alphabet-1} with length <= max_length.
inline std::vector<Sequence> AllSequences(int alphabet, int max_length) {
  std::vector<Sequence> out = {{}};
  std::size_t frontier = 0;
  for (int len = 1; len <= max_length; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = frontier; i < end; ++i) {
      for (int s = 0; s < alphabet; ++s) {
        Sequence next = out[i];
        next.push_back(s);
        out.push_back(std::move(next));
      }
    }
    frontier = end;
  }
  return out;
}

// Breadth-first search over single insert/delete/substitute moves from
// `source`. Returns the minimal number of moves to every sequence reached
// with length <= max_length (an optimal edit path never needs to grow past
// the longer of its endpoints).
inline std::map<Sequence, int> EditDistancesFrom(const Sequence& source,
                                                 int alphabet,
                                                 int max_length) {
  std::map<Sequence, int> dist;
  std::deque<Sequence> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const Sequence cur = queue.front();
    queue.pop_front();
    const int d = dist[cur];
    auto visit = [&](Sequence next) {
      if (static_cast<int>(next.size()) > max_length) return;
      if (dist.emplace(next, d + 1).second) queue.push_back(std::move(next));
    };
    for (std::size_t i = 0; i < cur.size(); ++i) {
      Sequence del = cur;
      del.erase(del.begin() + i);
      visit(std::move(del));
      for (int s = 0; s < alphabet; ++s) {
        if (s == cur[i]) continue;
        Sequence sub = cur;
        sub[i] = s;
        visit(std::move(sub));
      }
    }
    for (std::size_t i = 0; i <= cur.size(); ++i) {
      for (int s = 0; s < alphabet; ++s) {
        Sequence ins = cur;
        ins.insert(ins.begin() + i, s);
        visit(std::move(ins));
      }
    }
  }
  return dist;
}

// Shortest path through the alignment grid, 0-1 BFS: node (i, j) means
// i reference and j hypothesis words consumed; a matching diagonal step is
// free, every other step costs one edit.
inline std::size_t GridEditDistance(const std::vector<std::string>& ref,
                                    const std::vector<std::string>& hyp) {
  const std::size_t rows = ref.size() + 1, cols = hyp.size() + 1;
  std::vector<std::size_t> dist(rows * cols, SIZE_MAX);
  std::deque<std::size_t> queue;
  dist[0] = 0;
  queue.push_back(0);
  while (!queue.empty()) {
    const std::size_t node = queue.front();
    queue.pop_front();
    const std::size_t i = node / cols, j = node % cols;
    auto relax = [&](std::size_t ni, std::size_t nj, std::size_t cost) {
      if (ni >= rows || nj >= cols) return;
      const std::size_t next = ni * cols + nj;
      if (dist[node] + cost < dist[next]) {
        dist[next] = dist[node] + cost;
        if (cost == 0) {
          queue.push_front(next);
        } else {
          queue.push_back(next);
        }
      }
    };
    if (i < ref.size() && j < hyp.size()) {
      relax(i + 1, j + 1, ref[i] == hyp[j] ? 0 : 1);
    }
    relax(i + 1, j, 1);
    relax(i, j + 1, 1);
  }
  return dist.back();
}

// Random structured expression, formatted through the library's formatter.
// Payload ranges cover every surface family the extractor must recognize.
inline ParsedExpression RandomExpression(std::mt19937_64& rng,
                                         const Locale& locale) {
  auto uniform = [&rng](std::uint64_t lo, std::uint64_t hi) {
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
  };
  const bool de = locale.language() == Language::kGerman;
  ParsedExpression e;
  e.type = kAllExpressionTypes[uniform(0, 3)];
  switch (e.type) {
    case ExpressionType::kYear:
      e.payload = YearPayload{static_cast<int>(uniform(1000, 2100))};
      break;
    case ExpressionType::kTimestamp:
      e.payload = TimeOfDay{static_cast<int>(uniform(0, 23)),
                            static_cast<int>(uniform(0, 59))};
      break;
    case ExpressionType::kCurrency: {
      MoneyPayload m;
      const auto& units = locale.currencies();
      m.currency_code = units[uniform(0, units.size() - 1)].code;
      if (uniform(0, 4) == 0) {
        m.major = NumericValue{uniform(11, 999), 1, false};
        m.magnitude_word = de ? "Millionen" : "million";
      } else {
        m.major = NumericValue::Integer(uniform(0, 2'000'000));
        if (uniform(0, 1) == 1) {
          m.minor = NumericValue::Integer(uniform(1, 99));
          m.minor_spoken = true;
        }
      }
      e.payload = std::move(m);
      break;
    }
    case ExpressionType::kQuantity: {
      QuantityPayload q;
      q.value = uniform(0, 3) == 0 ? NumericValue{uniform(1, 99999), 2, false}
                                   : NumericValue::Integer(uniform(0, 9'999'999));
      q.unit_word = de ? "Teile" : "pieces";
      e.payload = std::move(q);
      break;
    }
  }
  return e;
}

}  // namespace numex::oracle

#endif  // NUMEX_TESTS_ORACLES_H_
