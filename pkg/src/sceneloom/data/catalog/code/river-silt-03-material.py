"""River Silt 03 Material generator (Materials)."""

PARAMS = {
    "size": 0.341,
    "detail": 3,
    "roughness": 0.601,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "River Silt 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
