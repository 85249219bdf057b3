"""River Silt 04 Material generator (Materials)."""

PARAMS = {
    "size": 0.741,
    "detail": 3,
    "roughness": 0.566,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "River Silt 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
