//! Framed container: a fixed header followed by packed code blocks.
//!
//! Layout: 4-byte magic `"HAM1"`, version byte `0x01`, one byte for the
//! check count `k`, then the payload byte length as a big-endian `u64`;
//! after the 14-byte header come `ceil(8 * len / m)` blocks of
//! `ceil(n / 8)` bytes each. Bits pack most significant first: position 1
//! is the top bit of a block's first byte, and pad bits are written zero.
//!
//! Blocks never share state, so the stream passes fan out with rayon when
//! the `parallel` feature is on (the default). The `_seq` variants always
//! run single-threaded and produce byte-identical output; they exist for
//! comparison runs and as the fallback build.

use crate::code::{self, CodeParams, Codeword, DecodeStatus, InfoBits};
use crate::error::FormatError;
use crate::sets::Form;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

pub const MAGIC: [u8; 4] = *b"HAM1";
pub const VERSION: u8 = 0x01;
pub const HEADER_LEN: usize = 14;

/// Parsed or to-be-written frame header.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameHeader {
    params: CodeParams,
    payload_len: u64,
}

impl FrameHeader {
    pub const fn new(params: CodeParams, payload_len: u64) -> Self {
        Self {
            params,
            payload_len,
        }
    }

    pub const fn params(&self) -> CodeParams {
        self.params
    }

    /// Payload length in bytes, before framing.
    pub const fn payload_len(&self) -> u64 {
        self.payload_len
    }

    /// Blocks the payload spans: `8 * len` bits at `m` information bits
    /// per block. Wide math, since an untrusted header may claim any length.
    fn block_count_wide(&self) -> u128 {
        let m = self.params.m() as u128;
        (8 * self.payload_len as u128).div_ceil(m)
    }

    /// Block count for a frame that exists in memory.
    pub fn block_count(&self) -> usize {
        self.block_count_wide() as usize
    }

    /// Bytes one packed block occupies.
    pub const fn packed_len(&self) -> usize {
        self.params.n().div_ceil(8)
    }

    fn body_len_wide(&self) -> u128 {
        self.block_count_wide() * self.packed_len() as u128
    }

    /// Total container size: header plus every packed block.
    pub fn framed_len(&self) -> usize {
        HEADER_LEN + self.block_count() * self.packed_len()
    }

    pub fn to_bytes(&self) -> [u8; HEADER_LEN] {
        let mut out = [0u8; HEADER_LEN];
        out[..4].copy_from_slice(&MAGIC);
        out[4] = VERSION;
        out[5] = self.params.k() as u8;
        out[6..].copy_from_slice(&self.payload_len.to_be_bytes());
        out
    }

    pub fn parse(bytes: &[u8]) -> Result<Self, FormatError> {
        if bytes.len() < HEADER_LEN {
            return Err(FormatError::TruncatedHeader(bytes.len()));
        }
        let found: [u8; 4] = bytes[..4].try_into().expect("slice is 4 bytes");
        if found != MAGIC {
            return Err(FormatError::BadMagic { found });
        }
        if bytes[4] != VERSION {
            return Err(FormatError::BadVersion(bytes[4]));
        }
        let params = CodeParams::new(u32::from(bytes[5]))
            .map_err(|_| FormatError::BadCheckCount(bytes[5]))?;
        let payload_len = u64::from_be_bytes(bytes[6..14].try_into().expect("slice is 8 bytes"));
        Ok(Self {
            params,
            payload_len,
        })
    }
}

/// Pack a block most-significant-bit first; pad bits come out zero.
pub fn pack(word: &Codeword) -> Vec<u8> {
    let mut out = vec![0u8; word.params().n().div_ceil(8)];
    for (i, &bit) in word.bits().iter().enumerate() {
        out[i / 8] |= bit << (7 - i % 8);
    }
    out
}

/// Rebuild a block from its packed bytes; pad bits are ignored.
pub fn unpack(params: CodeParams, bytes: &[u8]) -> Result<Codeword, FormatError> {
    let expected = params.n().div_ceil(8);
    if bytes.len() != expected {
        return Err(FormatError::BlockLength {
            expected,
            got: bytes.len(),
        });
    }
    let bits = (0..params.n())
        .map(|i| (bytes[i / 8] >> (7 - i % 8)) & 1)
        .collect();
    Ok(Codeword::from_raw(params, bits))
}

/// Payload bit `index`, counting most significant first; reads past the
/// end are the zero pad of the final block.
fn payload_bit(payload: &[u8], index: usize) -> u8 {
    if index / 8 < payload.len() {
        (payload[index / 8] >> (7 - index % 8)) & 1
    } else {
        0
    }
}

fn encode_block(payload: &[u8], params: CodeParams, form: Form, block: usize) -> Codeword {
    let m = params.m();
    let start = block * m;
    let bits = (0..m).map(|t| payload_bit(payload, start + t)).collect();
    code::encode(&InfoBits::from_raw(params, bits), form)
}

fn decode_block(
    params: CodeParams,
    chunk: &[u8],
    form: Form,
) -> Result<(InfoBits, DecodeStatus), FormatError> {
    let word = unpack(params, chunk)?;
    let outcome = code::decode(&word, form);
    Ok((code::extract_info(outcome.word()), outcome.status()))
}

fn assemble_payload(
    header: &FrameHeader,
    decoded: Vec<(InfoBits, DecodeStatus)>,
) -> (Vec<u8>, Vec<DecodeStatus>) {
    let payload_len = header.payload_len() as usize;
    let total_bits = payload_len * 8;
    let m = header.params().m();
    let mut payload = vec![0u8; payload_len];
    let mut statuses = Vec::with_capacity(decoded.len());
    for (block, (info, status)) in decoded.into_iter().enumerate() {
        statuses.push(status);
        for (t, &bit) in info.bits().iter().enumerate() {
            let index = block * m + t;
            if index >= total_bits {
                break;
            }
            payload[index / 8] |= bit << (7 - index % 8);
        }
    }
    (payload, statuses)
}

/// Frame `payload` into the container, one encoded block per `m`-bit slice.
pub fn encode_stream(payload: &[u8], params: CodeParams, form: Form) -> Vec<u8> {
    #[cfg(feature = "parallel")]
    {
        let header = FrameHeader::new(params, payload.len() as u64);
        let mut out = vec![0u8; header.framed_len()];
        let (head, body) = out.split_at_mut(HEADER_LEN);
        head.copy_from_slice(&header.to_bytes());
        body.par_chunks_mut(header.packed_len())
            .enumerate()
            .for_each(|(block, chunk)| {
                chunk.copy_from_slice(&pack(&encode_block(payload, params, form, block)));
            });
        out
    }
    #[cfg(not(feature = "parallel"))]
    encode_stream_seq(payload, params, form)
}

/// Single-threaded [`encode_stream`]; output is byte-identical.
pub fn encode_stream_seq(payload: &[u8], params: CodeParams, form: Form) -> Vec<u8> {
    let header = FrameHeader::new(params, payload.len() as u64);
    let mut out = Vec::with_capacity(header.framed_len());
    out.extend_from_slice(&header.to_bytes());
    for block in 0..header.block_count() {
        out.extend_from_slice(&pack(&encode_block(payload, params, form, block)));
    }
    out
}

fn checked_body<'a>(framed: &'a [u8], header: &FrameHeader) -> Result<&'a [u8], FormatError> {
    let body = &framed[HEADER_LEN..];
    let expected = header.body_len_wide();
    if body.len() as u128 != expected {
        // A body too large for usize cannot exist in memory, so saturating
        // the diagnostic loses nothing real.
        return Err(FormatError::BodyLength {
            expected: expected.min(usize::MAX as u128) as usize,
            got: body.len(),
        });
    }
    Ok(body)
}

/// Parse a frame, decode every block correcting at most one flip in each,
/// and reassemble the payload. Statuses come back in block order.
pub fn decode_stream(
    framed: &[u8],
    form: Form,
) -> Result<(Vec<u8>, Vec<DecodeStatus>), FormatError> {
    let header = FrameHeader::parse(framed)?;
    let body = checked_body(framed, &header)?;

    #[cfg(feature = "parallel")]
    let decoded = body
        .par_chunks(header.packed_len())
        .map(|chunk| decode_block(header.params(), chunk, form))
        .collect::<Result<Vec<_>, _>>()?;
    #[cfg(not(feature = "parallel"))]
    let decoded = body
        .chunks(header.packed_len())
        .map(|chunk| decode_block(header.params(), chunk, form))
        .collect::<Result<Vec<_>, _>>()?;

    Ok(assemble_payload(&header, decoded))
}

/// Parse a frame into its header and raw blocks without decoding them,
/// for callers that operate on blocks in place (e.g. channel damage).
pub fn split_blocks(framed: &[u8]) -> Result<(FrameHeader, Vec<Codeword>), FormatError> {
    let header = FrameHeader::parse(framed)?;
    let body = checked_body(framed, &header)?;
    let blocks = body
        .chunks(header.packed_len())
        .map(|chunk| unpack(header.params(), chunk))
        .collect::<Result<_, _>>()?;
    Ok((header, blocks))
}

/// Reframe blocks under an existing header. Inverse of [`split_blocks`]
/// as long as the block count is unchanged.
pub fn join_blocks(header: &FrameHeader, blocks: &[Codeword]) -> Vec<u8> {
    let mut out = Vec::with_capacity(header.framed_len());
    out.extend_from_slice(&header.to_bytes());
    for block in blocks {
        out.extend_from_slice(&pack(block));
    }
    out
}

/// Single-threaded [`decode_stream`]; output is identical.
pub fn decode_stream_seq(
    framed: &[u8],
    form: Form,
) -> Result<(Vec<u8>, Vec<DecodeStatus>), FormatError> {
    let header = FrameHeader::parse(framed)?;
    let body = checked_body(framed, &header)?;
    let decoded = body
        .chunks(header.packed_len())
        .map(|chunk| decode_block(header.params(), chunk, form))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(assemble_payload(&header, decoded))
}
