#pragma once

#include <memory>
#include <string>
#include <typeinfo>
#include <utility>

#include <json.hpp>

#include "bicheck/core/errors.hpp"

namespace bicheck {

using json = nlohmann::json;

// Type-erased immutable payload with decidable extensional equality.
// A payload type T needs `bool operator==(const T&) const` and
// `json to_json() const`.
class Value {
 public:
  Value() = default;

  template <typename T>
  static Value of(T v) {
    Value r;
    r.impl_ = std::make_shared<Model<T>>(std::move(v));
    return r;
  }

  bool has_value() const { return impl_ != nullptr; }

  template <typename T>
  const T* try_as() const {
    auto* m = dynamic_cast<const Model<T>*>(impl_.get());
    return m ? &m->v : nullptr;
  }

  template <typename T>
  const T& as() const {
    const T* p = try_as<T>();
    if (!p)
      throw InvalidValue(std::string("payload type mismatch, have ") +
                         (impl_ ? impl_->type().name() : "null") +
                         ", want " + typeid(T).name());
    return *p;
  }

  bool operator==(const Value& o) const {
    if (impl_ == o.impl_) return true;
    if (!impl_ || !o.impl_) return false;
    return impl_->eq(*o.impl_);
  }
  bool operator!=(const Value& o) const { return !(*this == o); }

  nlohmann::json to_json() const {
    return impl_ ? impl_->json_of() : nlohmann::json(nullptr);
  }
  std::string str() const { return to_json().dump(); }

 private:
  struct Concept {
    virtual ~Concept() = default;
    virtual bool eq(const Concept& o) const = 0;
    virtual nlohmann::json json_of() const = 0;
    virtual const std::type_info& type() const = 0;
  };
  template <typename T>
  struct Model final : Concept {
    explicit Model(T x) : v(std::move(x)) {}
    bool eq(const Concept& o) const override {
      auto* m = dynamic_cast<const Model<T>*>(&o);
      return m && v == m->v;
    }
    nlohmann::json json_of() const override { return v.to_json(); }
    const std::type_info& type() const override { return typeid(T); }
    T v;
  };
  std::shared_ptr<const Concept> impl_;
};

// Generic pair payload, used by product bicategories.
struct PairV {
  Value first, second;
  bool operator==(const PairV& o) const {
    return first == o.first && second == o.second;
  }
  nlohmann::json to_json() const {
    return nlohmann::json::array({first.to_json(), second.to_json()});
  }
};

struct Obj {
  Value v;
  bool operator==(const Obj& o) const { return v == o.v; }
  bool operator!=(const Obj& o) const { return !(*this == o); }
  nlohmann::json to_json() const { return v.to_json(); }
  std::string str() const { return v.str(); }
};

struct OneCell {
  Obj src, dst;
  Value v;
  bool operator==(const OneCell& o) const {
    return src == o.src && dst == o.dst && v == o.v;
  }
  bool operator!=(const OneCell& o) const { return !(*this == o); }
  nlohmann::json to_json() const {
    return nlohmann::json{
        {"src", src.to_json()}, {"dst", dst.to_json()}, {"cell", v.to_json()}};
  }
  std::string str() const { return to_json().dump(); }
};

struct TwoCell {
  OneCell src, dst;
  Value v;
  bool parallel() const { return src.src == dst.src && src.dst == dst.dst; }
  bool operator==(const TwoCell& o) const {
    return src == o.src && dst == o.dst && v == o.v;
  }
  bool operator!=(const TwoCell& o) const { return !(*this == o); }
  nlohmann::json to_json() const {
    return nlohmann::json{
        {"src", src.to_json()}, {"dst", dst.to_json()}, {"cell", v.to_json()}};
  }
  std::string str() const { return to_json().dump(); }
};

}  // namespace bicheck
