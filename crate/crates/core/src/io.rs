//! Little-endian binary container helpers shared by the `PF??` formats.
//!
//! Every on-disk artifact starts with a 4-byte magic and a u32 version.
//! Readers check both and fail with [`Error::Integrity`] on mismatch
//! rather than guessing.

use crate::{Error, Result};
use std::io::{Read, Write};

pub struct Writer<W: Write> {
    inner: W,
}

impl<W: Write> Writer<W> {
    pub fn new(mut inner: W, magic: &[u8; 4], version: u32) -> std::io::Result<Self> {
        inner.write_all(magic)?;
        inner.write_all(&version.to_le_bytes())?;
        Ok(Writer { inner })
    }

    pub fn u8(&mut self, v: u8) -> std::io::Result<()> {
        self.inner.write_all(&[v])
    }
    pub fn u32(&mut self, v: u32) -> std::io::Result<()> {
        self.inner.write_all(&v.to_le_bytes())
    }
    pub fn u64(&mut self, v: u64) -> std::io::Result<()> {
        self.inner.write_all(&v.to_le_bytes())
    }
    pub fn f64(&mut self, v: f64) -> std::io::Result<()> {
        self.inner.write_all(&v.to_le_bytes())
    }
    pub fn f64_slice(&mut self, vs: &[f64]) -> std::io::Result<()> {
        for v in vs {
            self.f64(*v)?;
        }
        Ok(())
    }
    pub fn bytes(&mut self, bs: &[u8]) -> std::io::Result<()> {
        self.inner.write_all(bs)
    }
    /// u32 length followed by the raw bytes.
    pub fn str(&mut self, s: &str) -> std::io::Result<()> {
        self.u32(s.len() as u32)?;
        self.bytes(s.as_bytes())
    }
    pub fn into_inner(self) -> W {
        self.inner
    }
}

pub struct Reader<R: Read> {
    inner: R,
}

impl<R: Read> Reader<R> {
    pub fn new(mut inner: R, magic: &[u8; 4], version: u32) -> Result<Self> {
        let mut m = [0u8; 4];
        inner
            .read_exact(&mut m)
            .map_err(|_| Error::Integrity("truncated header".into()))?;
        if &m != magic {
            return Err(Error::Integrity(format!(
                "bad magic {:?}, expected {:?}",
                String::from_utf8_lossy(&m),
                String::from_utf8_lossy(magic)
            )));
        }
        let mut r = Reader { inner };
        let v = r.u32()?;
        if v != version {
            return Err(Error::Integrity(format!(
                "unsupported version {v}, expected {version}"
            )));
        }
        Ok(r)
    }

    fn exact(&mut self, buf: &mut [u8]) -> Result<()> {
        self.inner
            .read_exact(buf)
            .map_err(|_| Error::Integrity("truncated container".into()))
    }

    pub fn u8(&mut self) -> Result<u8> {
        let mut b = [0u8; 1];
        self.exact(&mut b)?;
        Ok(b[0])
    }
    pub fn u32(&mut self) -> Result<u32> {
        let mut b = [0u8; 4];
        self.exact(&mut b)?;
        Ok(u32::from_le_bytes(b))
    }
    pub fn u64(&mut self) -> Result<u64> {
        let mut b = [0u8; 8];
        self.exact(&mut b)?;
        Ok(u64::from_le_bytes(b))
    }
    pub fn f64(&mut self) -> Result<f64> {
        let mut b = [0u8; 8];
        self.exact(&mut b)?;
        Ok(f64::from_le_bytes(b))
    }
    pub fn f64_vec(&mut self, n: usize) -> Result<Vec<f64>> {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(self.f64()?);
        }
        Ok(v)
    }
    pub fn byte_vec(&mut self, n: usize) -> Result<Vec<u8>> {
        let mut v = vec![0u8; n];
        self.exact(&mut v)?;
        Ok(v)
    }
    pub fn str(&mut self) -> Result<String> {
        let n = self.u32()? as usize;
        if n > (1 << 24) {
            return Err(Error::Integrity("string length out of range".into()));
        }
        let bytes = self.byte_vec(n)?;
        String::from_utf8(bytes).map_err(|_| Error::Integrity("non-utf8 string".into()))
    }
}

/// First 8 bytes of SHA-256, used as the container checksum.
pub fn checksum64(bytes: &[u8]) -> u64 {
    use sha2::{Digest, Sha256};
    let d = Sha256::digest(bytes);
    u64::from_le_bytes(d[..8].try_into().unwrap())
}
