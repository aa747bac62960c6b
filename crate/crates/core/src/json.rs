//! Byte-stable JSON output: keys sorted, pretty-printed, newline-terminated.

use serde::Serialize;

pub fn to_sorted_string<T: Serialize>(value: &T) -> String {
    // `Value` objects are BTreeMap-backed, so re-serializing sorts keys
    let value = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&value).expect("serializable");
    s.push('\n');
    s
}
