use crate::model::{EventSet, ModelError};

/// Parse a FLAT event-number comment such as `"Event 2, Event 3"`.
///
/// A missing or blank comment means event 1. Items are comma separated,
/// whitespace around and inside an item is ignored, and the keyword is
/// case-sensitive.
pub fn parse_event_refs(raw: Option<&str>) -> Result<EventSet, ModelError> {
    let Some(raw) = raw.filter(|r| !r.trim().is_empty()) else {
        return Ok(EventSet::default());
    };
    let mut numbers = Vec::new();
    for item in raw.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        numbers.push(
            parse_item(item)
                .ok_or_else(|| ModelError::BadEventRef(format!("`{item}` is not of the form `Event <n>`")))?,
        );
    }
    if numbers.is_empty() {
        return Err(ModelError::BadEventRef(format!("`{raw}` names no event")));
    }
    EventSet::new(numbers)
}

fn parse_item(item: &str) -> Option<u32> {
    let digits = item.strip_prefix("Event")?.trim_start();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok().filter(|&n| n > 0)
}
