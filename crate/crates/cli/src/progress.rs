/// Periodic progress lines on standard error, one every `PROGRESS_EVERY`
/// units, never interleaved into data files.
pub const PROGRESS_EVERY: u64 = 10_000_000;

pub struct Progress {
    label: &'static str,
    count: u64,
    next: u64,
}

impl Progress {
    pub fn new(label: &'static str) -> Self {
        Self {
            label,
            count: 0,
            next: PROGRESS_EVERY,
        }
    }

    #[inline]
    pub fn add(&mut self, amount: u64) {
        self.count += amount;
        if self.count >= self.next {
            eprintln!("{}... {} so far", self.label, self.count);
            self.next = self.count + PROGRESS_EVERY;
        }
    }

    pub fn count(&self) -> u64 {
        self.count
    }
}
