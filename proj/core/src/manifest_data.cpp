#include <charconv>
#include <mutex>
#include <sstream>

#include "netalg/errors.hpp"
#include "netalg/model_zoo.hpp"

namespace netalg {
namespace {

// Published ImageNet validation accuracies and parameter counts, one block
// per source repository snapshot. Missing accuracies are empty cells.
constexpr const char* kManifestCsv = R"(model,family,source,top1,top5,params
AlexNet,alexnet,table1,56.5180,79.0700,61100840
DenseNet 121,densenet,table1,74.4340,91.9720,7978856
DenseNet 161,densenet,table1,77.1380,93.5600,28681000
DenseNet 169,densenet,table1,75.6000,92.8060,14149480
DenseNet 201,densenet,table1,76.8960,93.3700,20013928
GoogleNet,googlenet,table1,69.7780,89.5300,6624904
Inception V3,inception,table1,69.5380,88.6540,23834568
MNasNet 0.5,mnasnet,table1,67.7340,87.4900,2218512
MNasNet 0.75,mnasnet,table1,,,3170208
MNasNet 1.0,mnasnet,table1,73.4560,91.5100,4383312
MNasNet 1.3,mnasnet,table1,,,6282256
MobileNet V2,mobilenet,table1,71.5140,90.5050,3504872
ResNet 101,resnet,table1,77.3470,93.5460,44549160
ResNet 152,resnet,table1,78.3120,94.0460,60192808
ResNet 18,resnet,table1,69.7580,89.0780,11689512
ResNet 34,resnet,table1,73.3140,91.4200,21797672
ResNet 50,resnet,table1,76.1300,92.8620,25557032
ResNext 101 32x8d,resnext,table1,79.3120,94.5260,88791336
ResNext 50 32x4d,resnext,table1,77.6180,93.6980,25028904
ShuffleNet V2 0.5,shufflenet,table1,60.5520,81.7460,1366792
ShuffleNet V2 1.0,shufflenet,table1,69.3620,88.3160,2278604
ShuffleNet V2 1.5,shufflenet,table1,,,3503624
ShuffleNet V2 2.2,shufflenet,table1,,,7393996
SqueezeNet 1.0,squeezenet,table1,58.0920,80.4200,1248424
SqueezeNet 1.1,squeezenet,table1,58.1780,80.6240,1235496
VGG 11,vgg,table1,69.0200,88.6300,132863336
VGG 13,vgg,table1,69.9300,89.2500,133047848
VGG 16,vgg,table1,71.5900,90.3800,138357544
VGG 19,vgg,table1,72.3800,90.8800,143667240
Wide ResNet 101 2,wide_resnet,table1,78.8460,94.2840,126884696
Wide ResNet 50 2,wide_resnet,table1,78.4680,94.0860,68883240
AmoebaNet-D BaseLine,amoebanet,table1,,,81505540
AmoebaNet-D PipeLine 1,amoebanet,table1,,,319024120
AmoebaNet-D PipeLine 2,amoebanet,table1,84.4000,97.0000,542734840
AmoebaNet-D PipeLine 4,amoebanet,table1,,,1055800000
AmoebaNet-D PipeLine 8,amoebanet,table1,,,1844900000
AlexNet,alexnet,table2,56.4320,79.1940,61100840
BN Inception,inception,table2,73.5240,91.5620,11295240
CaffeResnet 101,resnet,table2,76.2000,92.7660,44549160
DenseNet 121,densenet,table2,74.6460,92.1360,7978856
DenseNet 161,densenet,table2,77.5600,93.7980,28681000
DenseNet 169,densenet,table2,76.0260,92.9920,14149480
DenseNet 201,densenet,table2,77.1520,93.5480,20013928
FBResNet 152,resnet,table2,77.3860,93.5940,60268520
Inception ResNet V2,inception,table2,80.1700,95.2340,55843464
Inception V3,inception,table2,77.2940,93.4540,23834568
Inception V4,inception,table2,80.0620,94.9260,42679816
NASNet-A-Large,nasnet,table2,82.5660,96.0860,88753150
NASNet-A-Mobile,nasnet,table2,74.0800,91.7400,5289978
PNASNet-5-Large,pnasnet,table2,82.7360,95.9920,86057668
PolyNet,polynet,table2,81.0020,95.6240,95366600
ResNet 101,resnet,table2,77.4380,93.6720,44549160
ResNet 152,resnet,table2,78.4280,94.1100,60192808
ResNet 18,resnet,table2,70.1420,89.2740,11689512
ResNet 34,resnet,table2,73.5540,91.4560,21797672
ResNet 50,resnet,table2,76.0020,92.9800,25557032
ResNeXt 101 32x4d,resnext,table2,78.1880,93.8860,44177704
ResNeXt 101 64x4d,resnext,table2,78.9560,94.2520,83455272
SENet 154,senet,table2,81.3040,95.4980,115088984
SE-ResNet 101,senet,table2,78.3960,94.2580,49326872
SE-ResNet 152,senet,table2,78.6580,94.3740,66821848
SE-ResNet 50,senet,table2,77.6360,93.7520,28088024
SE-ResNeXt 101 32x4d,senet,table2,80.2360,95.0280,48955416
SE-ResNeXt 50 32x4d,senet,table2,79.0760,94.4340,27559896
SqueezeNet 1.0,squeezenet,table2,58.1080,80.4280,1248424
SqueezeNet 1.1,squeezenet,table2,58.2500,80.8000,1235496
VGG 11 BN,vgg,table2,70.4520,89.8180,132868840
VGG 11,vgg,table2,68.9700,88.7460,132863336
VGG 13 BN,vgg,table2,71.5080,90.4940,133053736
VGG 13,vgg,table2,69.6620,89.2640,133047848
VGG 16 BN,vgg,table2,73.5180,91.6080,138365992
VGG 16,vgg,table2,71.6360,90.3540,138357544
VGG 19 BN,vgg,table2,74.2660,92.0660,143678248
VGG 19,vgg,table2,72.0800,90.8220,143667240
Xception,xception,table2,78.8880,94.2920,22855952
NAS LargerNet,nasnet,table3,82.7000,96.2000,88949818
NAS MobileNet,nasnet,table3,74.0000,91.6000,5289978
Densenet 121,densenet,table3,74.9800,92.2900,7978856
Densenet 169,densenet,table3,76.2000,93.1500,14149480
Densenet 201,densenet,table3,77.4200,93.6600,20013928
Inception Resnet V2,inception,table3,80.1000,95.1000,55813192
Inception V3,inception,table3,78.8000,94.4000,23817352
Mobilenet,mobilenet,table3,70.6000,89.5000,4231976
Mobilenet V2,mobilenet,table3,74.7000,,3504872
Resnet 101,resnet,table3,80.1300,95.4000,44601832
Resnet 101 V2,resnet,table3,,,44577896
Resnet 152,resnet,table3,80.6200,95.5100,60268520
Resnet 152 V2,resnet,table3,,,60236904
Resnet 50,resnet,table3,79.2600,94.7500,25583592
Resnet 50 V2,resnet,table3,,,25568360
VGG 16,vgg,table3,75.6000,92.8000,138357544
VGG 19,vgg,table3,75.6000,92.9000,143667240
Xception,xception,table3,79.0000,94.5000,22855952
EfficientNet B0,efficientnet,table3,77.3000,93.5000,5288548
EfficientNet B1,efficientnet,table3,79.2000,94.5000,7856239
EfficientNet B2,efficientnet,table3,80.3000,95.0000,9109994
EfficientNet B3,efficientnet,table3,81.7000,95.6000,12233232
EfficientNet B4,efficientnet,table3,83.0000,96.3000,19341616
EfficientNet B5,efficientnet,table3,83.7000,96.7000,30389784
EfficientNet B6,efficientnet,table3,84.2000,96.8000,43040704
EfficientNet B7,efficientnet,table3,84.4000,97.1000,66347960
MNasNet A1,mnasnet,table3,,,3887038
MNasNet B1,mnasnet,table3,,,4383312
MNasNet Small,mnasnet,table3,,,2030264
MNasNet D1,mnasnet,table3,,,3638404
MNasNet D1 320,mnasnet,table3,,,6932240
DPN 92,dpn,table3,80.7000,95.3000,37655904
DPN 98,dpn,table3,81.1000,95.6000,61553152
DPN 107,dpn,table3,,,86879216
DPN 137,dpn,table3,81.4500,95.8400,79221824
)";

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) cells.push_back(cell);
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

std::vector<ModelRecord> parse_manifest() {
  std::vector<ModelRecord> records;
  std::stringstream ss(kManifestCsv);
  std::string line;
  std::getline(ss, line);  // header
  if (line != "model,family,source,top1,top5,params")
    throw NumericError("embedded manifest has an unexpected header");

  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 6) throw NumericError("malformed manifest row: " + line);
    ModelRecord r;
    r.name = cells[0];
    r.family = cells[1];
    r.source = cells[2];
    if (!cells[3].empty()) r.top1 = std::stod(cells[3]);
    if (!cells[4].empty()) r.top5 = std::stod(cells[4]);
    if (!cells[5].empty()) {
      std::int64_t p = 0;
      const auto [ptr, ec] = std::from_chars(cells[5].data(), cells[5].data() + cells[5].size(), p);
      if (ec != std::errc{} || ptr != cells[5].data() + cells[5].size())
        throw NumericError("malformed params in manifest row: " + line);
      r.params = p;
    }
    if (r.top1 && r.top5 && !(*r.top1 >= 0.0 && *r.top1 <= *r.top5 && *r.top5 <= 100.0))
      throw NumericError("manifest accuracy out of range: " + line);
    records.push_back(std::move(r));
  }
  return records;
}

}  // namespace

const std::vector<ModelRecord>& load_manifest() {
  static const std::vector<ModelRecord> records = parse_manifest();
  return records;
}

}  // namespace netalg
