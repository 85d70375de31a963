//! JSON encodings of results. Big integers are decimal strings.

use std::time::Instant;

use rcm_core::{FiniteField, GroupOrder, Matrix, OrderFactor, OrderParams, Ring};
use serde_json::{json, Value};

pub const SCHEMA: &str = "rcm/1";

/// The envelope every command prints.
#[derive(Debug, Clone)]
pub struct CommandResult {
    pub command: &'static str,
    pub params: Value,
    pub payload: Value,
    pub elapsed_ms: u128,
    /// Set when the command ran to completion but reports a failure.
    pub failed: bool,
}

impl CommandResult {
    pub fn new(command: &'static str, params: Value, payload: Value, started: Instant) -> Self {
        CommandResult {
            command,
            params,
            payload,
            elapsed_ms: started.elapsed().as_millis(),
            failed: false,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema": SCHEMA,
            "command": self.command,
            "params": self.params,
            "payload": self.payload,
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

pub fn order_json(order: &GroupOrder) -> Value {
    let (kind, params) = match order.params {
        OrderParams::Field { p, t, n } => ("field", json!({ "p": p, "t": t, "n": n })),
        OrderParams::Zmod { a, n } => ("zmod", json!({ "a": a, "n": n })),
    };
    let breakdown: Vec<Value> = order.breakdown.iter().map(factor_json).collect();
    json!({
        "kind": kind,
        "params": params,
        "order": order.value.to_string(),
        "breakdown": breakdown,
    })
}

fn factor_json(f: &OrderFactor) -> Value {
    match f {
        OrderFactor::Divisor {
            prime,
            d,
            cycle_length,
            cycle_count,
            p_exponent,
            factor,
        } => json!({
            "d": d,
            "prime": prime,
            "cycle_length": cycle_length,
            "cycle_count": cycle_count,
            "p_exponent": p_exponent,
            "factor": factor.to_string(),
        }),
        OrderFactor::Lift {
            prime,
            p_exponent,
            factor,
        } => json!({
            "d": null,
            "lift": true,
            "prime": prime,
            "p_exponent": p_exponent,
            "factor": factor.to_string(),
        }),
    }
}

pub fn field_json(f: &FiniteField) -> Value {
    json!({
        "p": f.characteristic(),
        "s": f.degree(),
        "order": f.order().to_string(),
        "modulus": f.modulus_coeffs(),
        "generator": f.generator(),
    })
}

pub fn matrix_json<R: Ring<Elem = u64>>(m: &Matrix<R>, ring: &str) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "ring": ring,
        "entries": m.entries(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rcm_core::circulant::{order_rc_field, order_rc_zmod};

    #[test]
    fn order_schema() {
        let v = order_json(&order_rc_field(2, 2, 3).unwrap());
        assert_eq!(v["kind"], "field");
        assert_eq!(v["order"], "27");
        assert_eq!(v["params"]["t"], 2);
        assert_eq!(v["breakdown"].as_array().unwrap().len(), 2);
        assert_eq!(v["breakdown"][0]["d"], 1);
        assert_eq!(v["breakdown"][0]["factor"], "3");
        let v = order_json(&order_rc_zmod(4, 2).unwrap());
        assert_eq!(v["kind"], "zmod");
        assert_eq!(v["order"], "8");
        assert!(v["breakdown"][0]["d"].is_null());
        assert_eq!(v["breakdown"][0]["factor"], "4");
    }

    #[test]
    fn envelope() {
        let r = CommandResult::new("order", json!({}), json!({"x": 1}), Instant::now());
        let v = r.to_json();
        assert_eq!(v["schema"], SCHEMA);
        assert_eq!(v["command"], "order");
        assert!(v["elapsed_ms"].is_u64());
    }
}
