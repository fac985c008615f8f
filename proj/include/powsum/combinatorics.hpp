#ifndef POWSUM_COMBINATORICS_HPP
#define POWSUM_COMBINATORICS_HPP

#include <deque>
#include <vector>

#include "powsum/rational.hpp"

namespace powsum {

/// Pascal-triangle cache of exact binomial coefficients. Rows are grown on
/// demand; lookups reuse earlier rows. Not safe for concurrent mutation,
/// grow the cache before sharing it read-only.
class BinomialCache {
public:
    const Integer& operator()(int n, int k);
    void grow_to(int n);

private:
    std::vector<std::vector<Integer>> rows_;
};

/// Factorial cache, same growth discipline as BinomialCache. Values live in
/// a deque so growth never invalidates references handed out earlier, even
/// within one expression.
class FactorialCache {
public:
    const Integer& operator()(int n);
    void grow_to(int n);

private:
    std::deque<Integer> values_;
};

Integer factorial(unsigned long n);

}  // namespace powsum

#endif
