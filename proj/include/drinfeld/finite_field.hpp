#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace drinfeld {

// Element of a finite field: the base-p digits of its coordinates in the
// polynomial basis 1, y, y^2, ... packed into one integer. Codes below p are
// the prime subfield; 0 and 1 are zero and one.
using Fe = std::uint32_t;

class FiniteField {
 public:
  // Interned instance of GF(p^n); references stay valid for the process.
  static const FiniteField& get(std::uint32_t p, std::uint32_t n);

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return n_; }
  std::uint32_t size() const { return size_; }
  // Monic defining polynomial over F_p, low-to-high coefficients.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Fe from_int(std::int64_t v) const;
  Fe add(Fe a, Fe b) const { return add_table_.empty() ? add_digits(a, b) : add_table_[a * size_ + b]; }
  Fe neg(Fe a) const { return neg_[a]; }
  Fe sub(Fe a, Fe b) const { return add(a, neg_[b]); }
  Fe mul(Fe a, Fe b) const { return (a == 0 || b == 0) ? 0 : exp_[log_[a] + log_[b]]; }
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  Fe pow(Fe a, std::int64_t e) const;
  Fe frobenius(Fe a) const { return pow(a, p_); }
  // Fixed primitive element.
  Fe generator() const { return exp_[1]; }
  // Discrete log with respect to generator(); a must be nonzero.
  std::uint32_t log(Fe a) const;

  std::vector<std::uint32_t> digits(Fe a) const;
  Fe from_digits(const std::vector<std::uint32_t>& d) const;
  std::string to_string(Fe a) const;

 private:
  FiniteField(std::uint32_t p, std::uint32_t n);
  Fe add_digits(Fe a, Fe b) const;
  Fe slow_mul(Fe a, Fe b) const;

  std::uint32_t p_;
  std::uint32_t n_;
  std::uint32_t size_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Fe> add_table_;
  std::vector<Fe> neg_;
  std::vector<Fe> exp_;
  std::vector<std::uint32_t> log_;
};

// F_q together with an extension F_{q^D} containing it. The base field is
// embedded by sending its primitive generator to a root of its defining
// polynomial inside the extension.
class ConstantExtension {
 public:
  // q = p^e, extension degree D over F_q.
  static const ConstantExtension& get(std::uint32_t q, std::uint32_t D);

  ConstantExtension(const ConstantExtension&) = delete;
  ConstantExtension& operator=(const ConstantExtension&) = delete;

  const FiniteField& base() const { return *base_; }
  const FiniteField& ext() const { return *ext_; }
  std::uint32_t q() const { return base_->size(); }
  std::uint32_t degree() const { return D_; }
  Fe embed(Fe base_element) const { return embed_[base_element]; }
  // Preimage of an element lying in the embedded copy of F_q.
  bool in_base(Fe ext_element) const;
  Fe to_base(Fe ext_element) const;

 private:
  ConstantExtension(std::uint32_t q, std::uint32_t D);

  const FiniteField* base_;
  const FiniteField* ext_;
  std::uint32_t D_;
  std::vector<Fe> embed_;
  std::vector<std::int64_t> preimage_;
};

// Splits q into p^e; throws InvalidArgument if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power(std::uint32_t q);

}  // namespace drinfeld
