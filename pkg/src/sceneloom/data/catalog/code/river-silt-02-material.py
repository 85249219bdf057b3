"""River Silt 02 Material generator (Materials)."""

PARAMS = {
    "size": 0.992,
    "detail": 4,
    "roughness": 0.787,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "River Silt 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
