#pragma once

#include <functional>
#include <vector>

namespace atomreach {

// Enumerates all set partitions of {0..n-1} as restricted growth strings:
// class_of[i] is the block of element i, blocks numbered by first occurrence.
// Deterministic order (lexicographic in the growth string).
inline void for_each_partition(
    int n, const std::function<void(const std::vector<int>& class_of, int num_classes)>& yield) {
  std::vector<int> class_of(n, 0);
  if (n == 0) {
    yield(class_of, 0);
    return;
  }
  std::vector<int> max_used(n, 0);  // max block index used among 0..i
  int i = 0;
  class_of[0] = 0;
  max_used[0] = 0;
  while (true) {
    if (i == n - 1) {
      yield(class_of, max_used[n - 1] + 1);
      // backtrack to the last position that can still grow
      while (i > 0) {
        int limit = max_used[i - 1] + 1;
        if (class_of[i] < limit) {
          ++class_of[i];
          break;
        }
        class_of[i] = 0;
        --i;
      }
      if (i == 0) return;
      max_used[i] = std::max(max_used[i - 1], class_of[i]);
      continue;
    }
    ++i;
    class_of[i] = 0;
    max_used[i] = max_used[i - 1];
  }
}

}  // namespace atomreach
