/// CODATA 2018 Hartree energy in electron-volts.
pub const HARTREE_IN_EV: f64 = 27.211_386_245_988;

/// Unit for reported energies. Internally everything is Hartree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, clap::ValueEnum)]
pub enum EnergyUnit {
    /// Rydberg (`hcR_H`, half a Hartree).
    #[default]
    Rydberg,
    Hartree,
    #[value(name = "ev")]
    ElectronVolt,
}

impl EnergyUnit {
    pub fn per_hartree(self) -> f64 {
        match self {
            EnergyUnit::Rydberg => 2.0,
            EnergyUnit::Hartree => 1.0,
            EnergyUnit::ElectronVolt => HARTREE_IN_EV,
        }
    }

    pub fn from_hartree(self, e: f64) -> f64 {
        e * self.per_hartree()
    }

    pub fn symbol(self) -> &'static str {
        match self {
            EnergyUnit::Rydberg => "Ry",
            EnergyUnit::Hartree => "Eh",
            EnergyUnit::ElectronVolt => "eV",
        }
    }
}
