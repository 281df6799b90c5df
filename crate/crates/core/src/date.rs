//! Day-precision proleptic Gregorian dates and validity intervals.
//!
//! Dump files may carry year-only values. Those are expanded to January 1st
//! when they open an interval and to December 31st when they close one, and
//! the resulting [`Date`] remembers that it is approximate.

use alloc::string::String;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid date `{0}`")]
pub struct DateError(pub String);

/// How precise the source value was.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub enum Precision {
    #[default]
    Day,
    /// Only the year was known; month and day were filled in.
    Year,
}

/// Where a year-only value sits inside an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Position {
    Start,
    End,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Date {
    year: i32,
    month: u8,
    day: u8,
    precision: Precision,
}

fn is_leap(year: i32) -> bool {
    (year % 4 == 0 && year % 100 != 0) || year % 400 == 0
}

fn days_in_month(year: i32, month: u8) -> u8 {
    match month {
        1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
        4 | 6 | 9 | 11 => 30,
        2 if is_leap(year) => 29,
        2 => 28,
        _ => 0,
    }
}

impl Date {
    pub fn from_ymd(year: i32, month: u8, day: u8) -> Option<Self> {
        if !(1..=12).contains(&month) || day == 0 || day > days_in_month(year, month) {
            return None;
        }
        Some(Self { year, month, day, precision: Precision::Day })
    }

    /// Year-only value expanded for the given interval position.
    pub fn from_year(year: i32, position: Position) -> Self {
        let (month, day) = match position {
            Position::Start => (1, 1),
            Position::End => (12, 31),
        };
        Self { year, month, day, precision: Precision::Year }
    }

    /// Parses `YYYY-MM-DD` or `YYYY` (optionally with a leading `-` for years
    /// before year zero).
    pub fn parse(text: &str, position: Position) -> Result<Self, DateError> {
        let err = || DateError(text.into());
        let (negative, body) = match text.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, text),
        };
        let mut parts = body.split('-');
        let year_text = parts.next().ok_or_else(err)?;
        if year_text.len() != 4 || !year_text.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let mut year: i32 = year_text.parse().map_err(|_| err())?;
        if negative {
            year = -year;
        }
        match (parts.next(), parts.next(), parts.next()) {
            (None, None, None) => Ok(Self::from_year(year, position)),
            (Some(m), Some(d), None) => {
                let two_digits = |s: &str| s.len() == 2 && s.bytes().all(|b| b.is_ascii_digit());
                if !two_digits(m) || !two_digits(d) {
                    return Err(err());
                }
                let month = m.parse().map_err(|_| err())?;
                let day = d.parse().map_err(|_| err())?;
                Self::from_ymd(year, month, day).ok_or_else(err)
            }
            _ => Err(err()),
        }
    }

    pub fn year(&self) -> i32 {
        self.year
    }

    pub fn month(&self) -> u8 {
        self.month
    }

    pub fn day(&self) -> u8 {
        self.day
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    pub fn is_approx(&self) -> bool {
        self.precision == Precision::Year
    }

    pub fn with_precision(mut self, precision: Precision) -> Self {
        self.precision = precision;
        self
    }

    /// Days since 1970-01-01 (negative before).
    pub fn day_number(&self) -> i64 {
        // Howard Hinnant's days_from_civil.
        let y = i64::from(self.year) - i64::from(self.month <= 2);
        let era = y.div_euclid(400);
        let yoe = y - era * 400;
        let m = i64::from(self.month);
        let doy = (153 * (if m > 2 { m - 3 } else { m + 9 }) + 2) / 5 + i64::from(self.day) - 1;
        let doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
        era * 146_097 + doe - 719_468
    }

    /// Signed number of days from `self` to `other`.
    pub fn days_until(&self, other: &Date) -> i64 {
        other.day_number() - self.day_number()
    }

    /// Calendar comparison that ignores precision.
    pub fn cmp_day(&self, other: &Date) -> Ordering {
        (self.year, self.month, self.day).cmp(&(other.year, other.month, other.day))
    }

    pub fn same_day(&self, other: &Date) -> bool {
        self.cmp_day(other) == Ordering::Equal
    }

    /// The text this date would have in a dump file.
    pub fn dump_form(&self) -> String {
        if self.is_approx() {
            if self.year < 0 {
                alloc::format!("-{:04}", -self.year)
            } else {
                alloc::format!("{:04}", self.year)
            }
        } else {
            alloc::format!("{self}")
        }
    }
}

impl fmt::Display for Date {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.year < 0 {
            write!(f, "-{:04}-{:02}-{:02}", -self.year, self.month, self.day)
        } else {
            write!(f, "{:04}-{:02}-{:02}", self.year, self.month, self.day)
        }
    }
}

impl FromStr for Date {
    type Err = DateError;

    /// Full `YYYY-MM-DD` only; year-only input needs a [`Position`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let date = Self::parse(s, Position::Start)?;
        if date.is_approx() {
            return Err(DateError(s.into()));
        }
        Ok(date)
    }
}

/// Serialized in dump form: `YYYY` for year-precision dates, `YYYY-MM-DD`
/// otherwise. A bare year deserializes as an interval start.
impl Serialize for Date {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(&self.dump_form())
    }
}

impl<'de> Deserialize<'de> for Date {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = <alloc::borrow::Cow<'de, str>>::deserialize(deserializer)?;
        Date::parse(&text, Position::Start).map_err(serde::de::Error::custom)
    }
}

/// Orders interval starts with an absent bound as the earliest value.
pub fn cmp_start(a: Option<&Date>, b: Option<&Date>) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Less,
        (Some(_), None) => Ordering::Greater,
        (Some(x), Some(y)) => x.cmp_day(y),
    }
}

/// Orders interval ends with an absent bound as the latest value.
pub fn cmp_end(a: Option<&Date>, b: Option<&Date>) -> Ordering {
    match (a, b) {
        (None, None) => Ordering::Equal,
        (None, Some(_)) => Ordering::Greater,
        (Some(_), None) => Ordering::Less,
        (Some(x), Some(y)) => x.cmp_day(y),
    }
}

/// A closed interval of days; an absent bound is unbounded on that side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DateInterval {
    pub start: Option<Date>,
    pub end: Option<Date>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("interval start {start} is after end {end}")]
pub struct IntervalError {
    pub start: Date,
    pub end: Date,
}

#[derive(Serialize, Deserialize)]
struct IntervalRepr<'a> {
    #[serde(borrow)]
    start: Option<alloc::borrow::Cow<'a, str>>,
    #[serde(borrow)]
    end: Option<alloc::borrow::Cow<'a, str>>,
}

impl Serialize for DateInterval {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        IntervalRepr { start: self.start.map(|d| d.dump_form().into()), end: self.end.map(|d| d.dump_form().into()) }
            .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for DateInterval {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = IntervalRepr::deserialize(deserializer)?;
        let start = repr.start.map(|t| Date::parse(&t, Position::Start)).transpose().map_err(D::Error::custom)?;
        let end = repr.end.map(|t| Date::parse(&t, Position::End)).transpose().map_err(D::Error::custom)?;
        DateInterval::new(start, end).map_err(D::Error::custom)
    }
}

impl DateInterval {
    pub fn new(start: Option<Date>, end: Option<Date>) -> Result<Self, IntervalError> {
        if let (Some(s), Some(e)) = (start, end) {
            if s.cmp_day(&e) == Ordering::Greater {
                return Err(IntervalError { start: s, end: e });
            }
        }
        Ok(Self { start, end })
    }

    pub fn point(date: Date) -> Self {
        Self { start: Some(date), end: Some(date) }
    }

    pub const fn unbounded() -> Self {
        Self { start: None, end: None }
    }

    pub fn has_bound(&self) -> bool {
        self.start.is_some() || self.end.is_some()
    }

    pub fn is_point(&self) -> bool {
        matches!((self.start, self.end), (Some(s), Some(e)) if s.same_day(&e))
    }

    /// Intersection, or `None` when the two intervals do not overlap.
    pub fn intersect(&self, other: &DateInterval) -> Option<DateInterval> {
        let start = match cmp_start(self.start.as_ref(), other.start.as_ref()) {
            Ordering::Less => other.start,
            _ => self.start,
        };
        let end = match cmp_end(self.end.as_ref(), other.end.as_ref()) {
            Ordering::Greater => other.end,
            _ => self.end,
        };
        DateInterval::new(start, end).ok()
    }

    pub fn overlaps(&self, other: &DateInterval) -> bool {
        self.intersect(other).is_some()
    }

    /// Whether `self` lies inside `other`, absent bounds being infinite.
    pub fn is_within(&self, other: &DateInterval) -> bool {
        cmp_start(other.start.as_ref(), self.start.as_ref()) != Ordering::Greater
            && cmp_end(self.end.as_ref(), other.end.as_ref()) != Ordering::Greater
    }

    /// Chronological order: start (absent first), then end (absent last).
    pub fn cmp_chronological(&self, other: &DateInterval) -> Ordering {
        cmp_start(self.start.as_ref(), other.start.as_ref())
            .then_with(|| cmp_end(self.end.as_ref(), other.end.as_ref()))
    }

    /// Year window used for matching years mentioned in text.
    pub fn contains_year(&self, year: i32) -> bool {
        self.start.is_none_or(|s| s.year() <= year) && self.end.is_none_or(|e| year <= e.year())
    }
}
