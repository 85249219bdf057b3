"""River Silt 05 Material generator (Materials)."""

PARAMS = {
    "size": 1.989,
    "detail": 1,
    "roughness": 0.249,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "River Silt 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
