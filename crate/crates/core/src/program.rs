//! Minimal single-assignment instruction set and its text format.
//!
//! A program is a straight list of instructions over virtual registers.
//! Each register is defined by exactly one static instruction, textually
//! before any use; loops re-instantiate registers dynamically, so all
//! loop-carried state goes through memory. Values are wrapping 64-bit
//! integers; memory is a flat byte-addressed array accessed in aligned
//! 8-byte words.
//!
//! Text format (one instruction per line, `#` comments, `label:` prefixes):
//!
//! ```text
//! .memory 65536          # memory size in bytes (default 65536)
//! .input n               # named input, referenced as `const @n`
//! .init 1024 7 -3        # pre-execution memory image, 8 bytes per value
//!         r1 = const @n
//!         r2 = mul r1, 3
//!         store [r1+8], r2
//! loop:   r3 = load [r1+8]
//!         branch r3, loop
//!         halt
//! ```

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

#[cfg(feature = "serde")]
use serde::{Deserialize, Serialize};

/// Word size of every value and memory access, in bytes.
pub const WORD_BYTES: u64 = 8;

/// Default memory size when the program has no `.memory` directive.
pub const DEFAULT_MEMORY_BYTES: u64 = 65536;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Opcode {
    Const,
    Add,
    Sub,
    Mul,
    Div,
    And,
    Or,
    Xor,
    Shift,
    Load,
    Store,
    Branch,
    Halt,
}

impl Opcode {
    pub fn name(self) -> &'static str {
        match self {
            Opcode::Const => "const",
            Opcode::Add => "add",
            Opcode::Sub => "sub",
            Opcode::Mul => "mul",
            Opcode::Div => "div",
            Opcode::And => "and",
            Opcode::Or => "or",
            Opcode::Xor => "xor",
            Opcode::Shift => "shift",
            Opcode::Load => "load",
            Opcode::Store => "store",
            Opcode::Branch => "branch",
            Opcode::Halt => "halt",
        }
    }

    fn from_name(s: &str) -> Option<Opcode> {
        Some(match s {
            "const" => Opcode::Const,
            "add" => Opcode::Add,
            "sub" => Opcode::Sub,
            "mul" => Opcode::Mul,
            "div" => Opcode::Div,
            "and" => Opcode::And,
            "or" => Opcode::Or,
            "xor" => Opcode::Xor,
            "shift" => Opcode::Shift,
            "load" => Opcode::Load,
            "store" => Opcode::Store,
            "branch" => Opcode::Branch,
            "halt" => Opcode::Halt,
            _ => return None,
        })
    }

    /// Instruction class; a pure function of the opcode.
    pub fn class(self) -> InstrClass {
        match self {
            Opcode::Load | Opcode::Store => InstrClass::Memory,
            Opcode::Mul => InstrClass::AluMul,
            Opcode::Div => InstrClass::AluDiv,
            Opcode::Branch | Opcode::Halt => InstrClass::Control,
            _ => InstrClass::AluSimple,
        }
    }

    /// Producer instructions are the ones a recalculation slice may
    /// re-execute: everything that writes a register except loads.
    pub fn is_producer(self) -> bool {
        !matches!(self, Opcode::Load | Opcode::Store | Opcode::Branch | Opcode::Halt)
    }
}

impl fmt::Display for Opcode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "kebab-case"))]
pub enum InstrClass {
    Memory,
    AluSimple,
    AluMul,
    AluDiv,
    Control,
}

impl InstrClass {
    pub fn name(self) -> &'static str {
        match self {
            InstrClass::Memory => "memory",
            InstrClass::AluSimple => "alu-simple",
            InstrClass::AluMul => "alu-mul",
            InstrClass::AluDiv => "alu-div",
            InstrClass::Control => "control",
        }
    }
}

impl fmt::Display for InstrClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Register id: index into [`Program::registers`].
pub type RegId = u32;

/// Static instruction id: index into [`Program::instructions`].
pub type Sid = u32;

/// A source operand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum Operand {
    Reg(RegId),
    Imm(i64),
    /// `@name` reference to a declared program input (index into
    /// [`Program::inputs`]); only legal on `const`.
    Input(u32),
}

/// Address expression: optional base register plus immediate offset.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct AddrExpr {
    pub base: Option<RegId>,
    pub offset: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct StaticInstr {
    pub sid: Sid,
    pub opcode: Opcode,
    /// Destination register for value-producing opcodes.
    pub dest: Option<RegId>,
    /// Source operands in syntactic order. For `store` this is the data
    /// operand; for `branch` the optional condition.
    pub srcs: Vec<Operand>,
    /// Address expression for `load`/`store`.
    pub addr: Option<AddrExpr>,
    /// Branch target (instruction index) for `branch`.
    pub target: Option<Sid>,
    /// Source line this instruction came from (1-based), for diagnostics.
    pub line: u32,
}

impl StaticInstr {
    pub fn class(&self) -> InstrClass {
        self.opcode.class()
    }
}

/// A parsed and validated program.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(Serialize, Deserialize))]
pub struct Program {
    pub instructions: Vec<StaticInstr>,
    /// Register names, indexed by [`RegId`].
    pub registers: Vec<String>,
    /// Declared input names, indexed by the id in [`Operand::Input`].
    pub inputs: Vec<String>,
    /// Declared memory size in bytes.
    pub memory_bytes: u64,
    /// Pre-execution memory image: (byte address, value) pairs.
    pub init: Vec<(u64, i64)>,
    /// Label name per label, for diagnostics and round-trips.
    pub labels: BTreeMap<String, Sid>,
}

impl Program {
    pub fn register_name(&self, r: RegId) -> &str {
        &self.registers[r as usize]
    }

    pub fn input_name(&self, i: u32) -> &str {
        &self.inputs[i as usize]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    Syntax { line: u32, msg: String },
    DoubleDefinition { line: u32, register: String },
    UndefinedRegister { line: u30, register: String },
    InvalidBranchTarget { line: u32, label: String },
    InitOutOfBounds { line: u32, addr: u64 },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Syntax { line, msg } => write!(f, "line {line}: {msg}"),
            ParseError::DoubleDefinition { line, register } => {
                write!(f, "line {line}: double definition of register {register}")
            }
            ParseError::UndefinedRegister { line, register } => {
                write!(f, "line {line}: undefined register {register}")
            }
            ParseError::InvalidBranchTarget { line, label } => {
                write!(f, "line {line}: invalid branch target {label}")
            }
            ParseError::InitOutOfBounds { line, addr } => {
                write!(f, "line {line}: .init address {addr} outside declared memory")
            }
        }
    }
}
