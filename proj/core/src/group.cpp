#include "galtrop/group.hpp"

#include <queue>
#include <string>

#include "galtrop/errors.hpp"

namespace galtrop {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::vector<int> generators)
    : table_(std::move(table)), generators_(std::move(generators)) {
  const int n = size();
  if (n == 0) throw MalformedInput("group must be non-empty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw MalformedInput("group table is not square");
    for (int x : row) {
      if (x < 0 || x >= n) throw MalformedInput("group table entry out of range");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (table_[0][a] != a || table_[a][0] != a) throw MalformedInput("element 0 is not the identity");
  }
  inverses_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (table_[a][b] == 0) {
        if (table_[b][a] != 0) throw MalformedInput("one-sided inverse in group table");
        inverses_[a] = b;
        break;
      }
    }
    if (inverses_[a] < 0) throw MalformedInput("element without inverse");
  }
  // Full associativity check; groups here are small.
  if (static_cast<long>(n) * n * n <= 2'000'000) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            throw MalformedInput("group table is not associative");
          }
        }
      }
    }
  }
  std::vector<bool> seen(n, false);
  std::queue<int> frontier;
  seen[0] = true;
  frontier.push(0);
  while (!frontier.empty()) {
    const int x = frontier.front();
    frontier.pop();
    for (int g : generators_) {
      if (g < 0 || g >= n) throw MalformedInput("generator index out of range");
      const int y = table_[x][g];
      if (!seen[y]) {
        seen[y] = true;
        frontier.push(y);
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    if (!seen[a]) throw MalformedInput("generators do not generate the group");
  }
}

FiniteGroup FiniteGroup::cyclic_product(const std::vector<int>& orders) {
  int n = 1;
  for (int m : orders) {
    if (m < 1) throw MalformedInput("cyclic factor order must be positive");
    n *= m;
  }
  auto encode = [&](const std::vector<int>& e) {
    int idx = 0;
    for (std::size_t i = orders.size(); i-- > 0;) idx = idx * orders[i] + e[i];
    return idx;
  };
  auto decode = [&](int idx) {
    std::vector<int> e(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) {
      e[i] = idx % orders[i];
      idx /= orders[i];
    }
    return e;
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a) {
    const auto ea = decode(a);
    for (int b = 0; b < n; ++b) {
      auto eb = decode(b);
      for (std::size_t i = 0; i < orders.size(); ++i) eb[i] = (ea[i] + eb[i]) % orders[i];
      table[a][b] = encode(eb);
    }
  }
  std::vector<int> gens;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    std::vector<int> e(orders.size(), 0);
    e[i] = orders[i] > 1 ? 1 : 0;
    gens.push_back(encode(e));
  }
  FiniteGroup g(std::move(table), std::move(gens));
  g.orders_ = orders;
  return g;
}

int FiniteGroup::power(int a, long e) const {
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  int result = 0;
  for (long i = 0; i < e; ++i) result = multiply(result, a);
  return result;
}

int FiniteGroup::order_of(int a) const {
  int x = a;
  int k = 1;
  while (x != 0) {
    x = multiply(x, a);
    ++k;
  }
  return k;
}

std::vector<int> FiniteGroup::exponents(int element) const {
  if (element < 0 || element >= size()) throw MalformedInput("element out of range");
  std::vector<int> e(orders_.size());
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    e[i] = element % orders_[i];
    element /= orders_[i];
  }
  return e;
}

}  // namespace galtrop
