//! Fixed-width unsigned fields packed into a growable bit buffer.

#[derive(Clone, Debug, Default)]
pub struct PackedBits {
    words: Vec<u64>,
    len_bits: u64,
}

impl PackedBits {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len_bits(&self) -> u64 {
        self.len_bits
    }

    /// Appends `bits` zero bits and returns the offset of the first one.
    pub fn grow(&mut self, bits: u64) -> u64 {
        let at = self.len_bits;
        self.len_bits += bits;
        let need = self.len_bits.div_ceil(64) as usize;
        if need > self.words.len() {
            self.words.resize(need, 0);
        }
        at
    }

    pub fn get(&self, at: u64, width: u32) -> u64 {
        debug_assert!(width <= 64 && at + width as u64 <= self.len_bits);
        if width == 0 {
            return 0;
        }
        let w = (at / 64) as usize;
        let off = (at % 64) as u32;
        let mut v = self.words[w] >> off;
        if off + width > 64 {
            v |= self.words[w + 1] << (64 - off);
        }
        v & mask(width)
    }

    pub fn set(&mut self, at: u64, width: u32, value: u64) {
        debug_assert!(width <= 64 && at + width as u64 <= self.len_bits);
        debug_assert!(value <= mask(width), "{value} does not fit in {width} bits");
        if width == 0 {
            return;
        }
        let w = (at / 64) as usize;
        let off = (at % 64) as u32;
        let m = mask(width);
        self.words[w] = (self.words[w] & !(m << off)) | (value << off);
        if off + width > 64 {
            let hi = 64 - off;
            let m_hi = m >> hi;
            self.words[w + 1] = (self.words[w + 1] & !m_hi) | (value >> hi);
        }
    }

    /// Heap bytes held by the buffer.
    pub fn allocated_bytes(&self) -> u64 {
        self.words.capacity() as u64 * 8
    }
}

fn mask(width: u32) -> u64 {
    if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    }
}

/// Number of bits needed to write `x`.
pub fn bit_length(x: u64) -> u32 {
    64 - x.leading_zeros()
}
